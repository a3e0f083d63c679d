"""Fit generating-function numerators for the families r = ns + c and r = ns - c.

Denominator 1 - x - (n+1)x^{d+1} is fixed; numerators come from oracle
terms, are checked on held-out terms, and the growth constant is read off
the fitted series.  Also reports from which s the family obeys
a(s) = a(s-1) + (n+1) a(s-d-1).

    python scripts/family_fits.py --dmax 2 --nmax 2
"""
import argparse
import json
from dataclasses import dataclass

import mpmath

from dcore import asymptotics as asy
from dcore import formulas as fm
from dcore import genfunc as gfm


@dataclass
class Config:
    dmax: int = 2
    nmax: int = 2
    holdout: int = 5


def main(cfg: Config):
    for d in range(1, cfg.dmax + 1):
        for n in range(1, cfg.nmax + 1):
            for c in range(1, d + 1):
                for sign in (1, -1):
                    f = gfm.fit_family(d, n, sign, c, holdout=cfg.holdout)
                    vals = dict(enumerate(f.train + f.holdout))
                    model = asy.model_family(d, n, sign, c, gf=f.gf)
                    print(json.dumps({
                        "d": d, "n": n, "r": f"ns{'+' if sign > 0 else '-'}{c}",
                        "numerator": list(f.gf.numerator),
                        "holdout_ok": f.holdout_ok,
                        "recurrence_from_s": fm.recurrence_threshold(vals, d, n),
                        "w": mpmath.nstr(model.w, 15),
                        "k": mpmath.nstr(model.K, 15),
                    }))


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--dmax", type=int, default=2)
    ap.add_argument("--nmax", type=int, default=2)
    ap.add_argument("--holdout", type=int, default=5)
    a = ap.parse_args()
    main(Config(a.dmax, a.nmax, a.holdout))
