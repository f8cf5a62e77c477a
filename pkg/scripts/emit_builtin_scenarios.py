#!/usr/bin/env python3
"""Write the shipped model configurations as .scenario files.

Usage:
  python scripts/emit_builtin_scenarios.py [outdir]
"""

import sys
from pathlib import Path

from lightsectors.scenarios import BUILTIN_NAMES, builtin_scenario, serialize_scenario


def main() -> int:
    outdir = Path(sys.argv[1]) if len(sys.argv) > 1 else Path("scenarios")
    outdir.mkdir(parents=True, exist_ok=True)
    for name in BUILTIN_NAMES:
        path = outdir / f"{name}.scenario"
        path.write_text(serialize_scenario(builtin_scenario(name)), encoding="utf-8")
        print(f"wrote {path}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
