"""Rebuild the per-row golden reports.

Run from the repository root after an intentional behavior change:

    python3 tests/regen_golden.py

Timing fields are omitted so the files are stable across machines.  The
J5b report deliberately records one failing claim; regenerating does not
hide it.
"""
import pathlib

from cubicaut.catalog import TAGS
from cubicaut.verify import render_report, verify_entry


def main():
    out = pathlib.Path(__file__).parent / "golden"
    out.mkdir(exist_ok=True)
    for tag in TAGS:
        claims = verify_entry(tag)
        path = out / f"{tag}.json"
        path.write_text(render_report(claims, include_timing=False),
                        encoding="utf-8")
        fails = sum(1 for c in claims if c.status == "fail")
        print(f"{tag}: {len(claims)} claims, {fails} failing -> {path}")


if __name__ == "__main__":
    main()
