"""Compare the residue-derived prefactor K with exact counts N_{d,r}(s) w^s.

Also prints the ratio of the unreduced constant (no 1/w) to K, which should
equal w_d.

    python scripts/prefactor_check.py --dmax 4 --s 200 500 1000
"""
import argparse
from dataclasses import dataclass, field

import mpmath

from dcore import asymptotics as asy


@dataclass
class Config:
    dmax: int = 4
    s_values: list = field(default_factory=lambda: [100, 500, 1000])


def main(cfg: Config):
    print("d r            w_d                K     ratio/w-1 " +
          " ".join(f"err@s={s}" for s in cfg.s_values))
    with mpmath.workdps(asy.DPS):
        for d in range(1, cfg.dmax + 1):
            w = asy.find_wd(d)
            for r in range(1, d + 1):
                K = asy.asymptotic_constant(d, r)
                ratio = asy.printed_constant(d, r) / K
                errs = [abs(asy.prefactor_limit(d, r, s) / K - 1) for s in cfg.s_values]
                print(f"{d} {r} {mpmath.nstr(w, 16):>16} {mpmath.nstr(K, 16):>16} "
                      f"{mpmath.nstr(ratio / w - 1, 3):>9} "
                      + " ".join(f"{mpmath.nstr(e, 3):>9}" for e in errs))


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--dmax", type=int, default=4)
    ap.add_argument("--s", type=int, nargs="+", default=[100, 500, 1000])
    a = ap.parse_args()
    main(Config(a.dmax, a.s))
