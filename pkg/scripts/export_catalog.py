#!/usr/bin/env python3
"""Export every catalog entry (at default parameters) as a JSON file.

Usage: python scripts/export_catalog.py [OUTPUT_DIR]
"""
from __future__ import annotations

import pathlib
import sys

from superquad import catalog, serialization


def main(argv: list[str]) -> int:
    out_dir = pathlib.Path(argv[1]) if len(argv) > 1 else pathlib.Path("exports")
    out_dir.mkdir(parents=True, exist_ok=True)
    for key in catalog.catalog_keys():
        obj = catalog.build(key)
        path = out_dir / f"{key}.json"
        serialization.save(str(path), obj)
        print(f"wrote {path}")
    return 0


if __name__ == "__main__":
    sys.exit(main(sys.argv))
