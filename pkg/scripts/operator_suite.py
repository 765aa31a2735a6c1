"""Run the operator identity suite and print one line per identity family."""
import argparse
from dataclasses import dataclass

from affschub.cartan import build_root_system
from affschub.coeffring import Theory
from affschub.gkm import verify_operators


@dataclass
class SuiteConfig:
    system: str = "A2"
    theory: str = "K"
    max_length: int = 4
    radius: int = 4
    seed: int = 0


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    for k, v in vars(SuiteConfig()).items():
        ap.add_argument(f"--{k.replace('_', '-')}", type=type(v), default=v)
    cfg = SuiteConfig(**vars(ap.parse_args()))
    rs = build_root_system(cfg.system[0], int(cfg.system[1:]))
    for rep in verify_operators(Theory(cfg.theory, rs), cfg.max_length, cfg.radius, cfg.seed):
        line = f"{rep.name:20} {rep.status} cases={rep.cases} points={rep.points_checked}"
        if rep.counterexample:
            line += f" first failure: {rep.counterexample['case']}"
        print(line)


if __name__ == "__main__":
    main()
