"""Pretty printing that renders exact pyCoring values as strings."""


__all__ = ["PrettyPrinter", "pprint", "pformat"]


from ..scalardicts import ScalarDict, LinearMap

from typing import ClassVar
import pprint as _pprint


class PrettyPrinter(_pprint.PrettyPrinter):
    """Renders ScalarDict and LinearMap values as exact strings."""

    _dispatch: ClassVar[dict] = dict(_pprint.PrettyPrinter._dispatch) # type: ignore

    def _pprint_scalardict(
        self, object, stream, indent, allowance, context, level
    ):

        name = type(object).__name__
        indent += len(name) + 1
        stream.write(name + '(')
        self._pprint_dict( # type: ignore
            object.formatted(), stream, indent, allowance + 1, context, level)
        stream.write(f", field={object.field})")

    _dispatch[ScalarDict.__repr__] = _pprint_scalardict

    def _pprint_linearmap(
        self, object, stream, indent, allowance, context, level
    ):

        name = type(object).__name__
        indent += len(name) + 1
        images = {k: img.formatted() for k, img in object.items()}
        stream.write(name + '(')
        self._pprint_dict( # type: ignore
            images, stream, indent, allowance + 1, context, level)
        stream.write(f", field={object.field})")

    _dispatch[LinearMap.__repr__] = _pprint_linearmap


def pprint(object, stream=None, indent=1, width=80, depth=None, *,
           compact=False):
    """Pretty-print object to stream, exact values as strings."""

    printer = PrettyPrinter(
        stream=stream, indent=indent, width=width, depth=depth, compact=compact
    )
    printer.pprint(object)


def pformat(object, indent=1, width=80, depth=None, *, compact=False):
    """Return the pretty-printed form of object."""

    printer = PrettyPrinter(
        indent=indent, width=width, depth=depth, compact=compact
    )

    return printer.pformat(object)
