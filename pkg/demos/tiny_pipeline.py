"""The whole command-line workflow on configs/tiny.toml, with a short readout.

    python demos/tiny_pipeline.py [OUT_DIR]

Equivalent to ``mvbeam pipeline --config configs/tiny.toml --out OUT_DIR``; the
numbers are meaningless at this size, the point is the file layout.
"""
import csv
import json
import sys
from pathlib import Path

from mvbeam.cli import main

ROOT = Path(__file__).resolve().parents[1]


def rows(path):
    with open(path, newline="") as fh:
        return list(csv.DictReader(fh))


if __name__ == "__main__":
    out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path("runs/tiny")
    code = main(["pipeline", "--config", str(ROOT / "configs" / "tiny.toml"), "--seed", "0", "--out", str(out)])
    if code:
        sys.exit(code)

    m = json.loads((out / "metrics.json").read_text())
    print(f"\n{m['samples']} test windows, PBSN accuracy {m['bs_selection']['accuracy']:.3f}")
    for r in rows(out / "baselines.csv")[::4]:
        print(f"  {r['model']:13s} accuracy {float(r['accuracy']):.3f}")
    for r in rows(out / "rate.csv"):
        print(f"  {float(r['snr_db']):5.1f} dB: rate {float(r['model_rate']):.3f} of bound {float(r['upper_bound']):.3f}")
    t = json.loads((out / "timing.json").read_text())
    print("stage seconds: " + ", ".join(f"{k} {v:.1f}" for k, v in t["seconds"].items()))
    print(f"files: {sorted(p.name for p in out.iterdir())}")
