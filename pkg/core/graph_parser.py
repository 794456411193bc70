"""
Reader and writer for the plain-text board format.

    # comments run to the end of the line
    start 0
    vertices 3        (optional; required only for a lone vertex)
    edge 0 1
    edge 0 2
"""
import logging
import re
from pathlib import Path
from typing import BinaryIO, List, Optional, Tuple, Union

from core.errors import GraphParseError
from core.graph_builder import from_edge_list, edges_of
from models.graph import Graph

logger = logging.getLogger(__name__)

# ASCII digits only, no sign or underscores
INDEX_PATTERN = re.compile(r"[0-9]+")


class GraphParser:
    """
    Parser for board files. Reports problems with 1-based line numbers.
    """

    KEYWORDS = {'start': 1, 'vertices': 1, 'edge': 2}

    @classmethod
    def parse(cls, file: Union[str, Path, BinaryIO], start: Optional[int] = None) -> Graph:
        """
        Parse a board from a file path or binary file-like object.

        Args:
            file: File path or file-like object
            start: Optional start vertex overriding the file's ``start`` line

        Returns:
            The parsed Graph
        """
        if isinstance(file, (str, Path)):
            path = Path(file)
            try:
                with open(path, 'rb') as f:
                    text = cls._decode(f.read())
            except OSError as e:
                raise GraphParseError(f"cannot read {path}: {e}")
            name = path.stem
        else:
            text = cls._decode(file.read())
            name = ""
        return cls.parse_text(text, start=start, name=name)

    @classmethod
    def parse_text(cls, text: str, start: Optional[int] = None, name: str = "") -> Graph:
        declared_start: Optional[int] = None
        vertex_count: Optional[int] = None
        edges: List[Tuple[int, int]] = []
        last_line = 0

        for line_number, raw in enumerate(text.splitlines(), 1):
            last_line = line_number
            line = raw.split('#', 1)[0].strip()
            if not line:
                continue
            keyword, *values = line.split()
            if keyword not in cls.KEYWORDS:
                raise GraphParseError(f"unknown keyword {keyword!r}", line_number)
            if len(values) != cls.KEYWORDS[keyword]:
                raise GraphParseError(
                    f"{keyword!r} expects {cls.KEYWORDS[keyword]} integer(s), got {len(values)}",
                    line_number,
                )
            numbers = [cls._parse_index(value, line_number) for value in values]

            if declared_start is None and keyword != 'start':
                raise GraphParseError("the first line must be 'start <index>'", line_number)
            if keyword == 'start':
                if declared_start is not None:
                    raise GraphParseError("duplicate 'start' line", line_number)
                declared_start = numbers[0]
            elif keyword == 'vertices':
                if vertex_count is not None:
                    raise GraphParseError("duplicate 'vertices' line", line_number)
                if numbers[0] == 0:
                    raise GraphParseError("'vertices' must be positive", line_number)
                vertex_count = numbers[0]
            else:
                edges.append((numbers[0], numbers[1]))

        if declared_start is None:
            raise GraphParseError("missing 'start <index>' line", last_line or 1)
        if not edges and vertex_count is None:
            vertex_count = 1

        graph = from_edge_list(
            edges,
            declared_start if start is None else start,
            vertex_count=vertex_count,
            name=name,
        )
        logger.debug("Parsed board %r: %d vertices, %d edges", name, graph.vertex_count, len(edges))
        return graph

    @classmethod
    def format(cls, g: Graph) -> str:
        """Render a board in the same text format."""
        lines = [f"start {g.start}"]
        if g.vertex_count == 1:
            lines.append("vertices 1")
        lines.extend(f"edge {u} {v}" for u, v in edges_of(g))
        return '\n'.join(lines) + '\n'

    @staticmethod
    def _parse_index(value: str, line_number: int) -> int:
        if not INDEX_PATTERN.fullmatch(value):
            raise GraphParseError(f"expected a nonnegative decimal integer, got {value!r}", line_number)
        return int(value)

    @staticmethod
    def _decode(content: bytes) -> str:
        for encoding in ['utf-8', 'latin-1']:
            try:
                return content.decode(encoding)
            except UnicodeDecodeError:
                continue
        return content.decode('utf-8', errors='ignore')
