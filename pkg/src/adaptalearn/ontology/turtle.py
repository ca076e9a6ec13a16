"""Line-oriented Turtle-subset parser and canonical serializer.

Grammar (one statement per line):

    line        := prefix-decl | triple | blank | comment
    prefix-decl := "@prefix" PNAME ":" "<" IRI ">" "."
    triple      := name name (name | literal) "."
    name        := PNAME? ":" LOCAL          (empty PNAME is the default prefix)
    literal     := '"' chars '"' ("^^" name)?
    comment     := "#" to end of line

Typed literals use the XSD namespace (integer, string, boolean, anyURI); a
bare quoted literal is a string.  Serialization is canonical: prefixes
sorted lexicographically, triples sorted by (subject, predicate, object),
so two graphs equal as sets serialize identically and
``parse(serialize(g)) == g``.
"""

from __future__ import annotations

import re

from .model import (
    XSD_IRI,
    GraphError,
    Literal,
    Name,
    NodeValue,
    Triple,
    TripleGraph,
    UndeclaredPrefixError,
    well_known_name,
)

_PNAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_-]*")
_LOCAL_RE = re.compile(r"[A-Za-z0-9_][A-Za-z0-9_-]*")

_ESCAPES = {"\\": "\\", '"': '"', "n": "\n", "r": "\r", "t": "\t"}
_UNESCAPES = {"\\": "\\\\", '"': '\\"', "\n": "\\n", "\r": "\\r", "\t": "\\t"}


class TurtleSyntaxError(GraphError):
    """Syntax error with 1-based line/column and the offending token."""

    def __init__(self, message: str, line: int, column: int, token: str = ""):
        self.line = line
        self.column = column
        self.token = token
        at = f" at line {line}, column {column}"
        tok = f" (offending token {token!r})" if token else ""
        super().__init__(f"{message}{at}{tok}")


class _LineScanner:
    """Single-statement scanner over one input line."""

    def __init__(self, text: str, line_no: int):
        self.text = text
        self.line_no = line_no
        self.pos = 0

    def error(self, message: str, token: str = "", pos: int | None = None) -> TurtleSyntaxError:
        column = (self.pos if pos is None else pos) + 1
        return TurtleSyntaxError(message, self.line_no, column, token)

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos] in " \t":
            self.pos += 1

    def at_end(self) -> bool:
        self.skip_ws()
        return self.pos >= len(self.text) or self.text[self.pos] == "#"

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, token: str) -> None:
        self.skip_ws()
        if not self.text.startswith(token, self.pos):
            found = self.peek() or "<end of line>"
            raise self.error(f"expected {token!r}", found)
        self.pos += len(token)

    def match_keyword(self, word: str) -> bool:
        self.skip_ws()
        if self.text.startswith(word, self.pos):
            self.pos += len(word)
            return True
        return False

    def scan_name(self) -> Name:
        self.skip_ws()
        start = self.pos
        m = _PNAME_RE.match(self.text, self.pos)
        prefix = ""
        if m:
            prefix = m.group(0)
            self.pos = m.end()
        if self.peek() != ":":
            raise self.error("expected a name", self.peek() or "<end of line>", start)
        self.pos += 1
        m = _LOCAL_RE.match(self.text, self.pos)
        if not m:
            raise self.error(
                "name is missing its local part", self.peek() or "<end of line>", start
            )
        self.pos = m.end()
        return Name(prefix, m.group(0))

    def scan_iri(self) -> str:
        self.skip_ws()
        start = self.pos
        self.expect("<")
        end = self.text.find(">", self.pos)
        if end < 0:
            raise self.error("unterminated IRI", self.text[start:], start)
        iri = self.text[self.pos:end]
        if not iri or any(c in iri for c in " \t<>\""):
            raise self.error("malformed IRI", self.text[start:end + 1], start)
        self.pos = end + 1
        return iri

    def scan_quoted(self) -> str:
        start = self.pos
        self.expect('"')
        out: list[str] = []
        while True:
            if self.pos >= len(self.text):
                raise self.error("unterminated string literal", self.text[start:], start)
            c = self.text[self.pos]
            if c == '"':
                self.pos += 1
                return "".join(out)
            if c == "\\":
                esc = self.text[self.pos + 1:self.pos + 2]
                if esc not in _ESCAPES:
                    raise self.error("bad escape sequence", "\\" + esc, self.pos)
                out.append(_ESCAPES[esc])
                self.pos += 2
            else:
                out.append(c)
                self.pos += 1


def _resolve_datatype(name: Name, prefixes: dict[str, str],
                      scanner: _LineScanner, pos: int) -> str:
    if name.prefix not in prefixes:
        raise UndeclaredPrefixError(name.prefix, scanner.line_no, pos + 1)
    if prefixes[name.prefix] != XSD_IRI or name.local not in (
        "integer", "string", "boolean", "anyURI"
    ):
        raise scanner.error("unsupported literal datatype", str(name), pos)
    return name.local


def parse(text: str) -> TripleGraph:
    """Parse graph text; duplicate triples collapse into one.

    Raises TurtleSyntaxError (with line/column and the offending token) on
    malformed input and UndeclaredPrefixError when a name uses a prefix
    with no earlier @prefix declaration.
    """
    prefixes: dict[str, str] = {}
    triples: set[Triple] = set()

    for line_no, raw in enumerate(text.splitlines(), start=1):
        scanner = _LineScanner(raw, line_no)
        if scanner.at_end():
            continue
        if scanner.match_keyword("@prefix"):
            start = scanner.pos
            scanner.skip_ws()
            m = _PNAME_RE.match(scanner.text, scanner.pos)
            label = ""
            if m:
                label = m.group(0)
                scanner.pos = m.end()
            if scanner.peek() != ":":
                raise scanner.error("expected prefix label ending in ':'",
                                    scanner.peek() or "<end of line>", start)
            scanner.pos += 1
            iri = scanner.scan_iri()
            scanner.expect(".")
            if not scanner.at_end():
                raise scanner.error("trailing input after '.'", scanner.peek())
            prefixes[label] = iri
            continue

        # triple statement
        def checked_name() -> Name:
            pos = scanner.pos
            name = scanner.scan_name()
            if name.prefix not in prefixes:
                raise UndeclaredPrefixError(name.prefix, line_no, pos + 1)
            return name

        subject = checked_name()
        predicate = checked_name()
        scanner.skip_ws()
        obj: NodeValue
        if scanner.peek() == '"':
            lexical = scanner.scan_quoted()
            datatype = "string"
            if scanner.text.startswith("^^", scanner.pos):
                scanner.pos += 2
                dt_pos = scanner.pos
                dt_name = scanner.scan_name()
                datatype = _resolve_datatype(dt_name, prefixes, scanner, dt_pos)
            try:
                obj = Literal(lexical, datatype)
            except GraphError as exc:
                raise scanner.error(str(exc), lexical) from None
        else:
            obj = checked_name()
        scanner.expect(".")
        if not scanner.at_end():
            raise scanner.error("trailing input after '.'", scanner.peek())
        triples.add(Triple(subject, predicate, obj))

    return TripleGraph(prefixes, frozenset(triples))


def _render_literal(lit: Literal, prefixes: dict[str, str]) -> str:
    quoted = '"' + "".join(_UNESCAPES.get(c, c) for c in lit.lexical) + '"'
    if lit.datatype == "string":
        return quoted
    xsd = well_known_name(prefixes, XSD_IRI, lit.datatype)
    return f"{quoted}^^{xsd}"


def _render_node(value: NodeValue, prefixes: dict[str, str]) -> str:
    if isinstance(value, Name):
        return str(value)
    return _render_literal(value, prefixes)


def serialize(graph: TripleGraph) -> str:
    """Canonical text form: sorted prefixes, blank line, sorted triples."""
    lines = [
        f"@prefix {label}: <{iri}> ."
        for label, iri in sorted(graph.prefixes.items())
    ]
    triples = graph.sorted_triples()
    if lines and triples:
        lines.append("")
    for t in triples:
        lines.append(
            f"{t.subject} {t.predicate} {_render_node(t.object, graph.prefixes)} ."
        )
    return "\n".join(lines) + ("\n" if lines else "")
