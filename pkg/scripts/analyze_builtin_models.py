#!/usr/bin/env python3
"""Run the shipped model configurations end to end and print their reports.

Usage:
  python scripts/analyze_builtin_models.py [--format text|machine]
"""

import argparse
import sys

from lightsectors.report import analysis_document, render_report
from lightsectors.scenarios import BUILTIN_NAMES, builtin_scenario, to_package


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--format", choices=("text", "machine"), default="text")
    args = parser.parse_args()

    for name in BUILTIN_NAMES:
        scenario = builtin_scenario(name)
        doc = analysis_document(to_package(scenario), scenario.name)
        sys.stdout.buffer.write(render_report(doc, args.format))
        sys.stdout.buffer.write(b"\n")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
