"""Data model for scanned source files and extracted declarations."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class SourceUnit:
    """One source file: project-relative path plus decoded content."""

    path: str
    content: str
    class_names: list[str] = field(default_factory=list)
    # All identifier lexemes in the file; used by call resolution to decide
    # whether a class is "referenced" here. Filled by parse_unit.
    referenced_names: set[str] = field(default_factory=set)


@dataclass(frozen=True)
class MethodDecl:
    """One declared method or constructor.

    ``id`` is ``ClassName.methodName/arity``, suffixed with ``@<path stem>``
    when the same id occurs in more than one file.
    """

    id: str
    class_name: str
    method_name: str
    arity: int
    file: str
    span_start: int
    span_end: int

    def contains(self, offset: int) -> bool:
        return self.span_start <= offset < self.span_end


@dataclass(frozen=True)
class RawCallSite:
    """A syntactic call ``name(...)`` found inside a method body."""

    caller: str
    callee_name: str
    arg_count: int | None
    site: int
