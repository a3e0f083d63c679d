"""Tabulate the transcribed r = ns-1 closed form against enumeration.

For each (d, n, s) prints the oracle count, the transcribed sum, and the
corrected formula, marking rows where the transcription is off.

    python scripts/ns1_discrepancy.py --dmax 3 --nmax 2 --smax 10
"""
import argparse
from dataclasses import dataclass

from dcore import formulas as fm
from dcore.oracle import count


@dataclass
class Config:
    dmax: int = 3
    nmax: int = 2
    smax: int = 10


def rows(cfg: Config):
    for d in range(1, cfg.dmax + 1):
        for n in range(1, cfg.nmax + 1):
            for s in range(1, cfg.smax + 1):
                if n * s - 1 < 1:
                    continue
                yield d, n, s, count(d, n * s - 1, s), fm.n_ns_minus_1_printed(d, n, s), \
                    fm.n_ns_minus_1(d, n, s)


def main(cfg: Config):
    bad = total = 0
    print(f"{'d':>2} {'n':>2} {'s':>3} {'oracle':>8} {'printed':>8} {'fixed':>8}")
    for d, n, s, o, p, f in rows(cfg):
        total += 1
        bad += p != o
        flag = "  <- printed off" if p != o else ""
        flag += "  <- FIXED OFF" if f != o else ""
        print(f"{d:>2} {n:>2} {s:>3} {o:>8} {p:>8} {f:>8}{flag}")
    print(f"transcribed form differs in {bad} of {total} cases")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--dmax", type=int, default=3)
    ap.add_argument("--nmax", type=int, default=2)
    ap.add_argument("--smax", type=int, default=10)
    a = ap.parse_args()
    main(Config(a.dmax, a.nmax, a.smax))
