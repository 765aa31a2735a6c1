"""Time the pointwise coproduct check across root systems, theories and variants."""
import argparse
import json
import time
from dataclasses import asdict, dataclass, field

from affschub.cartan import build_root_system
from affschub.coeffring import Theory
from affschub.gkm import VARIANTS, verify_coproduct


@dataclass
class SweepConfig:
    systems: list = field(default_factory=lambda: ["A1", "A2", "C2"])
    max_length: int = 4
    radius: int = 8


def run(cfg: SweepConfig) -> list[dict]:
    rows = []
    for label in cfg.systems:
        rs = build_root_system(label[0], int(label[1:]))
        for name in ("K", "H"):
            th = Theory(name, rs)
            for variant in VARIANTS:
                t0 = time.perf_counter()
                points = failures = 0
                for w in rs.affine.ball(cfg.max_length):
                    rep = verify_coproduct(th, w, cfg.radius, variant)
                    points += rep.points_checked
                    failures += not rep.ok
                rows.append({"system": label, "theory": name, "variant": variant, "points": points,
                             "failures": failures, "seconds": round(time.perf_counter() - t0, 2)})
    return rows


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--systems", nargs="+", default=SweepConfig().systems)
    ap.add_argument("--max-length", type=int, default=SweepConfig.max_length)
    ap.add_argument("--radius", type=int, default=SweepConfig.radius)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()
    cfg = SweepConfig(args.systems, args.max_length, args.radius)
    rows = run(cfg)
    if args.json:
        print(json.dumps({"config": asdict(cfg), "rows": rows}, indent=2))
        return
    for r in rows:
        print(f"{r['system']:3} {r['theory']} {r['variant']:16} points={r['points']:6} "
              f"failures={r['failures']} {r['seconds']:.2f}s")


if __name__ == "__main__":
    main()
