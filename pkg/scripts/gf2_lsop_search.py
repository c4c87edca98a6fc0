"""Exhaustive search for linear systems of parameters over GF(2).

Over GF(2) an lsop of a complex whose edge graph is complete must label the
vertices injectively with nonzero vectors of GF(2)^d. For d = 3 there are
only seven such vectors, so every candidate for a 7-vertex complex can be
tried. The script counts valid labellings, then shows that random forms over
GF(2^k) succeed for the same complex.

    python scripts/gf2_lsop_search.py
"""

import itertools
import time

import numpy as np

from srtk import builtin, make_field
from srtk.reduction import LinearForms, LsopNotFound, graded_reduction, random_lsop, socle_profile, verify_lsop


def count_gf2_lsops(cx):
    gf2 = make_field(2)
    vectors = [np.array([(x >> i) & 1 for i in range(cx.d)]) for x in range(1, 2 ** cx.d)]
    total = found = 0
    for labels in itertools.permutations(range(len(vectors)), cx.n):
        total += 1
        found += verify_lsop(cx, LinearForms(np.stack([vectors[i] for i in labels], axis=1), gf2))
    return found, total


def main():
    for name in ("rp2_6", "torus7"):
        cx = builtin(name)
        t = time.perf_counter()
        found, total = count_gf2_lsops(cx)
        print(f"{name}: {found} of {total} injective GF(2) labellings are lsops ({time.perf_counter() - t:.1f}s)")
    torus = builtin("torus7")
    for k in (1, 2, 3):
        fld = make_field(2, k)
        try:
            forms = random_lsop(torus, fld, 0, max_attempts=50)
        except LsopNotFound as exc:
            print(f"torus7 over GF({2 ** k}): {exc}")
            continue
        R = graded_reduction(torus, forms)
        print(f"torus7 over GF({2 ** k}): dims {R.hilbert_function()}, socle {socle_profile(R).nonzero()}")


if __name__ == "__main__":
    import warnings

    warnings.simplefilter("ignore", UserWarning)
    main()
