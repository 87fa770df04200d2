#!/usr/bin/env python3
"""Print the headline energy table (27 graph families, weights 0.0..0.9).

Default output is an aligned text table for reading; --format csv/json
match the library's machine formats byte for byte.
"""

import argparse
import sys

from alphaenergy.analysis import format_csv, format_table_json, table1


def render_text(table) -> str:
    widths = [max(len("graph"), *(len(lbl) for lbl in table.row_labels))]
    headers = ["graph"] + [f"a={a.numeric:g}" for a in table.alphas]
    widths += [max(len(h), 9) for h in headers[1:]]
    lines = ["  ".join(h.rjust(w) for h, w in zip(headers, widths))]
    for label, row in zip(table.row_labels, table.cells):
        cells = [label.rjust(widths[0])]
        cells += [f"{x:9.4f}".rjust(w) for x, w in zip(row, widths[1:])]
        lines.append("  ".join(cells))
    return "\n".join(lines) + "\n"


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--format", choices=("text", "csv", "json"), default="text")
    args = ap.parse_args(argv)

    table = table1()
    if args.format == "csv":
        sys.stdout.write(format_csv(table))
    elif args.format == "json":
        sys.stdout.write(format_table_json(table))
    else:
        sys.stdout.write(render_text(table))
    return 0


if __name__ == "__main__":
    sys.exit(main())
