#!/usr/bin/env python3
"""Smoke test for the Python bindings.

Builds nothing itself: expects `cargo build --release -p fisherpoly-py`
to have produced the cdylib, copies it next to this script under the
importable module name, and checks a few known values.
"""

import glob
import math
import os
import shutil
import sys

HERE = os.path.dirname(os.path.abspath(__file__))
ROOT = os.path.dirname(HERE)


def locate_extension():
    patterns = [
        os.path.join(ROOT, "target", profile, pattern)
        for profile in ("release", "debug")
        for pattern in ("libfisherpoly_py.so", "libfisherpoly_py.dylib", "fisherpoly_py.dll")
    ]
    for pattern in patterns:
        for path in glob.glob(pattern):
            return path
    sys.exit(
        "extension not found; run `cargo build --release -p fisherpoly-py` first"
    )


def main():
    src = locate_extension()
    suffix = ".pyd" if src.endswith(".dll") else ".so"
    dst = os.path.join(HERE, "fisherpoly" + suffix)
    shutil.copyfile(src, dst)
    sys.path.insert(0, HERE)
    import fisherpoly as fp

    def close(a, b, tol=1e-10):
        assert abs(a - b) <= tol * max(1.0, abs(b)), f"{a} vs {b}"

    # Laguerre ground state: trigamma(1) = pi^2/6
    close(fp.fisher_sum("laguerre", "alpha", 0, alpha=0.0), math.pi**2 / 6)
    close(fp.fisher_closed("laguerre", "alpha", 1, alpha=0.0), 1 + math.pi**2 / 6)

    # Jacobi reduction at n=0, alpha=beta=0
    close(fp.fisher_sum("jacobi", "alpha", 0, alpha=0.0, beta=0.0), 1.0)

    # Gegenbauer n=0 at lambda=1/2
    close(
        fp.fisher_closed("gegenbauer", "lambda", 0, lambda_=0.5),
        4 - math.pi**2 / 3,
    )

    # Grosjean I at the symmetric point: 16 + 2 trigamma(3/2) = 8 + pi^2
    close(fp.fisher_sum("grosjean1", "alpha", 1, alpha=-0.5), 8 + math.pi**2)

    # sum and closed forms agree across a few cases
    for family, target, kwargs in [
        ("laguerre", "alpha", {"alpha": 2.5}),
        ("jacobi", "beta", {"alpha": -0.5, "beta": 1.0}),
        ("gegenbauer", "lambda", {"lambda_": 3.0}),
        ("grosjean2", "alpha", {"alpha": 1.9}),
    ]:
        for n in range(6):
            close(
                fp.fisher_sum(family, target, n, **kwargs),
                fp.fisher_closed(family, target, n, **kwargs),
            )

    # oracle agrees with the closed form
    close(
        fp.fisher_oracle("laguerre", "alpha", 2, alpha=0.5),
        fp.fisher_closed("laguerre", "alpha", 2, alpha=0.5),
        tol=1e-6,
    )

    # coefficients: Laguerre n=2 orthogonal coefficients are [1/2, 1, 0]
    assert fp.coeffs_orthogonal("laguerre", "alpha", 2, alpha=0.8) == [0.5, 1.0, 0.0]

    # orthonormal evaluation and norm sanity
    close(fp.eval_orthonormal("laguerre", 0, 0.7, alpha=0.0), 1.0)
    close(fp.norm_squared("laguerre", 3, alpha=0.0), 1.0)
    close(fp.weight("laguerre", 1.0, alpha=0.0), math.exp(-1.0))
    close(
        fp.rakhmanov_density("laguerre", 0, 1.0, alpha=0.0),
        math.exp(-1.0),
    )

    # domain errors surface as ValueError
    try:
        fp.fisher_sum("gegenbauer", "lambda", 0, lambda_=0.0)
    except ValueError:
        pass
    else:
        sys.exit("expected ValueError for lambda = 0")

    print("smoke test passed")


if __name__ == "__main__":
    main()
