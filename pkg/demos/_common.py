from __future__ import annotations

import argparse
from pathlib import Path


def output_dir(description: str) -> Path:
    ap = argparse.ArgumentParser(description=description)
    ap.add_argument("--out", default="demo_output", help="directory for SVG figures")
    out = Path(ap.parse_args().out)
    out.mkdir(parents=True, exist_ok=True)
    return out
