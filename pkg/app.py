# encoding:utf-8

import argparse
import sys

from bridge.context import Context, ContextType
from channel import channel_factory
from common import const
from common.log import logger
from config import load_config

COMMAND_TYPES = {
    const.CHECK: ContextType.CHECK,
    const.CANON: ContextType.CANON,
    const.ROOTS: ContextType.ROOTS,
    const.GEN: ContextType.GEN,
    const.SEARCH: ContextType.SEARCH,
    const.RENDER: ContextType.RENDER,
    const.LEMMAS: ContextType.LEMMAS,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="planebalance", description="Balanced plane vector configurations: verdicts, canonical forms, root grids.")
    parser.add_argument("--config", default=None, help="config json, defaults to ./config.json or ./config-template.json")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_output(p, formats=None):
        p.add_argument("--out", default=None, help="write the result to this path instead of stdout")
        if formats:
            p.add_argument("--format", choices=formats, default=formats[0])
        return p

    for name, helptext in ((const.CHECK, "balanced / uniform verdicts"), (const.CANON, "canonical form"), (const.LEMMAS, "structural checks on an odd configuration")):
        p = with_output(sub.add_parser(name, help=helptext))
        p.add_argument("path")
        p.add_argument("--tol", type=float, default=None)

    p = with_output(sub.add_parser(const.ROOTS, help="solve w_n(t) = U and compare with the closed-form grid"))
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--m", type=int, default=None)

    p = with_output(sub.add_parser(const.GEN, help="emit U_m or a model configuration"), ["json", "svg"])
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--seed", type=int, default=None)

    p = with_output(sub.add_parser(const.SEARCH, help="exhaustive search over an integer grid"))
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--coords", required=True, help="comma separated, e.g. --coords=-1,0,1")
    p.add_argument("--require-uniform", action="store_true")
    p.add_argument("--no-dedupe", action="store_true")

    p = with_output(sub.add_parser(const.RENDER, help="draw a configuration as svg"), ["svg", "json"])
    p.add_argument("path")
    return parser


def build_context(args: argparse.Namespace) -> Context:
    kwargs = {k: v for k, v in vars(args).items() if k not in ("command", "path", "config")}
    return Context(COMMAND_TYPES[args.command], getattr(args, "path", None), kwargs)


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else const.EXIT_USAGE

    try:
        load_config(args.config)
        context = build_context(args)
        channel = channel_factory.create_channel(const.FILE if args.out else const.TERMINAL)
        return channel.handle(context)
    except OSError as e:
        logger.error("[App] I/O error: {}".format(e))
        return const.EXIT_USAGE
    except Exception as e:
        logger.error("[App] {} failed!".format(args.command))
        logger.exception(e)
        return const.EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
