#!/usr/bin/env python3
"""Run the three eulerian detectors over an antichain sweep and report disagreements.

    python scripts/run_sweep.py                     # 5-element exhaustive + 1000 random
    python scripts/run_sweep.py --exhaustive-n 6    # slow: about 7.8 million antichains
"""
import argparse
import json
import time
from dataclasses import asdict, dataclass, field

from bshopf.antichains import sweep
from bshopf.core import closure
from bshopf.eulerian import dehn_sommerville_check, is_eulerian, is_eulerian_geometric


@dataclass
class SweepConfig:
    exhaustive_n: int = 5
    random_count: int = 1000
    max_n: int = 8
    seed: int = 20240611


@dataclass
class SweepReport:
    config: SweepConfig
    instances: int = 0
    eulerian: int = 0
    seconds: float = 0.0
    disagreements: list = field(default_factory=list)


def run(cfg: SweepConfig) -> SweepReport:
    report = SweepReport(cfg)
    start = time.perf_counter()
    for l in sweep(cfg.exhaustive_n, cfg.random_count, cfg.max_n, cfg.seed):
        b = closure(l)
        verdicts = (is_eulerian(b), is_eulerian_geometric(b), dehn_sommerville_check(b))
        report.instances += 1
        report.eulerian += verdicts[0]
        if len(set(verdicts)) > 1:
            report.disagreements.append({
                "n": b.n,
                "c_min": [_bits(s) for s in b.c_min],
                "definition": verdicts[0], "geometric": verdicts[1],
                "dehn_sommerville": verdicts[2]})
    report.seconds = round(time.perf_counter() - start, 2)
    return report


def _bits(mask: int) -> list[int]:
    return [i for i in range(mask.bit_length()) if mask >> i & 1]


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    cfg = SweepConfig()
    for name, value in asdict(cfg).items():
        ap.add_argument("--" + name.replace("_", "-"), type=int, default=value)
    args = ap.parse_args()
    report = run(SweepConfig(**vars(args)))
    print(json.dumps(asdict(report), indent=2))


if __name__ == "__main__":
    main()
