"""Print assembled Peterson elements for Grassmannian elements up to a given length."""
import argparse
from dataclasses import dataclass

from affschub.cartan import build_root_system
from affschub.coeffring import Theory
from affschub.gkm import peterson_assemble


@dataclass
class PetersonConfig:
    system: str = "A1"
    theory: str = "H"
    max_length: int = 2


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    for k, v in vars(PetersonConfig()).items():
        ap.add_argument(f"--{k.replace('_', '-')}", type=type(v), default=v)
    cfg = PetersonConfig(**vars(ap.parse_args()))
    rs = build_root_system(cfg.system[0], int(cfg.system[1:]))
    th = Theory(cfg.theory, rs)
    G = rs.affine
    for u in G.ball(cfg.max_length):
        if G.is_grassmannian(u):
            res = peterson_assemble(th, u)
            print(f"{u!r}\tradius={res.radius}\t{res.element!r}")


if __name__ == "__main__":
    main()
