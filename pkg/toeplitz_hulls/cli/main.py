import argparse
import logging
import sys

from .. import COMMAND_CLASS_MAPPINGS, ToeplitzHulls, __version__
from ..config import override_settings, reset_settings

logger = logging.getLogger(__name__)


class CommandLineParser(argparse.ArgumentParser):
    """ArgumentParser whose usage errors exit with status 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _bounded_int(name, options):
    def parse(text):
        try:
            value = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"{name} must be an integer, got '{text}'")
        if "min" in options and value < options["min"]:
            raise argparse.ArgumentTypeError(f"{name} must be >= {options['min']}, got {value}")
        if "max" in options and value > options["max"]:
            raise argparse.ArgumentTypeError(f"{name} must be <= {options['max']}, got {value}")
        return value

    return parse


def _add_input(parser, name, spec, positional):
    kind = spec[0]
    options = spec[1] if len(spec) > 1 else {}
    kwargs = {"help": options.get("help")}
    if positional:
        flags = [name]
    else:
        flags = ["--" + name.replace("_", "-")]
        kwargs["dest"] = name
        kwargs["default"] = options.get("default")
        if options.get("required"):
            kwargs["required"] = True

    if isinstance(kind, list):
        kwargs["choices"] = kind
    elif kind == "INT":
        kwargs["type"] = _bounded_int(name, options)
    elif kind == "BOOLEAN":
        kwargs["action"] = "store_true"
    elif kind == "STRING":
        kwargs["type"] = str
    else:
        raise ValueError(f"Unsupported input type: {kind}")
    parser.add_argument(*flags, **kwargs)


def _add_global_flags(parser, suppress=False):
    def default(value):
        return argparse.SUPPRESS if suppress else value

    parser.add_argument("--budget", type=_bounded_int("budget", {"min": 1}), default=default(None),
                        help="largest message space enumerated for distances")
    parser.add_argument("--workers", type=_bounded_int("workers", {"min": 1}), default=default(None),
                        help="threads used by enumeration and table rows")
    parser.add_argument("--csv", action="store_true", default=default(False), help="CSV output")
    parser.add_argument("--json", action="store_true", default=default(False), help="JSON output")
    parser.add_argument("--show-matrix", action="store_true", default=default(False),
                        help="print generator matrices")
    parser.add_argument("--verbose", action="store_true", default=default(False), help="debug logging")


def build_parser():
    parser = CommandLineParser(
        prog="toeplitz-hulls",
        description=ToeplitzHulls.get_description(),
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    _add_global_flags(parser)
    subparsers = parser.add_subparsers(dest="command", required=True, metavar="command")
    for name, command_cls in COMMAND_CLASS_MAPPINGS.items():
        subparser = subparsers.add_parser(
            name,
            help=command_cls.get_summary(),
            description=command_cls.get_description(),
            formatter_class=argparse.RawDescriptionHelpFormatter,
        )
        inputs = command_cls.INPUT_TYPES()
        for input_name, spec in inputs.get("required", {}).items():
            _add_input(subparser, input_name, spec, positional=True)
        for input_name, spec in inputs.get("optional", {}).items():
            _add_input(subparser, input_name, spec, positional=False)
        _add_global_flags(subparser, suppress=True)
    return parser


def main(argv=None):
    parser = build_parser()
    options = parser.parse_args(argv)

    logging.basicConfig(
        level=logging.DEBUG if options.verbose else logging.INFO,
        format="%(levelname)s %(name)s: %(message)s",
    )
    reset_settings()
    override_settings(enumeration_budget=options.budget, workers=options.workers)

    command_cls = COMMAND_CLASS_MAPPINGS[options.command]
    command = command_cls(options)
    kwargs = {name: getattr(options, name) for name in command_cls.argument_names()}
    try:
        return getattr(command, command_cls.FUNCTION)(**kwargs)
    except ValueError as exc:
        logger.debug("Command %s failed", options.command, exc_info=True)
        print(f"error: {exc}", file=sys.stderr)
        return 1
