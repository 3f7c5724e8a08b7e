"""``refltk <command> --spec FILE [--json] [--cap N] [--expansion N]``"""

import argparse
import sys

from .errors import ReflError
from .report import COMMANDS, render_json, render_text, run
from .spec_io import load_group_spec


def build_parser():
    p = argparse.ArgumentParser(prog="refltk",
                                description="Exact verification toolkit for finite orthogonal reflection groups.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--spec", required=True, metavar="FILE", help="group definition (JSON)")
    p.add_argument("--json", action="store_true", help="print the structured report")
    p.add_argument("--cap", type=int, metavar="N", help="order cap for the group closure")
    p.add_argument("--expansion", type=int, metavar="N", help="Molien expansion degree")
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    for name, value in (("--cap", args.cap), ("--expansion", args.expansion)):
        if value is not None and value < 1:
            print(f"error [usage]: {name} must be positive", file=sys.stderr)
            return 2
    try:
        spec = load_group_spec(args.spec).with_options(order_cap=args.cap, expansion_degree=args.expansion)
    except ReflError as exc:
        print(f"error [{exc.code}]: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error [io]: {exc}", file=sys.stderr)
        return 2
    doc, code = run(args.command, spec)
    sys.stdout.write(render_json(doc) if args.json else render_text(doc))
    return code


if __name__ == "__main__":
    sys.exit(main())
