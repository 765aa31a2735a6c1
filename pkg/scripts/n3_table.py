"""Print affine Schubert polynomials for affine A_{n-1} up to a given length."""
import argparse
from dataclasses import dataclass

from affschub.typea import affine_elements, affine_schubert_poly


@dataclass
class TableConfig:
    n: int = 3
    max_length: int = 3
    basis: str = "auto"


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=TableConfig.n)
    ap.add_argument("--max-length", type=int, default=TableConfig.max_length)
    ap.add_argument("--basis", default=TableConfig.basis, choices=("auto", "m", "h", "e", "s"))
    cfg = TableConfig(**{k.replace("-", "_"): v for k, v in vars(ap.parse_args()).items()})
    for w in affine_elements(cfg.n, cfg.max_length):
        word = ",".join(map(str, w.word)) or "e"
        print(f"{word}\t{affine_schubert_poly(w, cfg.n).text(cfg.basis)}")


if __name__ == "__main__":
    main()
