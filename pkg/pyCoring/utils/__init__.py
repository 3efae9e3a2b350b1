from .pprint import pprint, pformat
from .load import SpecError, parse_spec, dump_spec, input_hash, load, dump
from .report import Report


__all__ = ["pprint", "pformat", "SpecError", "parse_spec", "dump_spec",
    "input_hash", "load", "dump", "Report"]
