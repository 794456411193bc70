"""
Validated command-line requests.
"""
from pathlib import Path
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from config.engine_config import Method, OutputFormat
from core.errors import ClosedFormUnavailableError
from models.graph import TreeSpec


class SolveRequest(BaseModel):
    """
    One request to solve, trace or simulate a board. Exactly one of ``tree``
    and ``graph_path`` names the board.
    """
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    tree: Optional[TreeSpec] = None
    graph_path: Optional[Path] = None
    start: Optional[int] = Field(default=None, ge=0)
    method: Method = Method.ALL
    trials: int = Field(default=1_000_000, ge=1)
    seed: Optional[int] = Field(default=None, ge=0, lt=2**64)
    workers: Optional[int] = Field(default=None, ge=1)
    output: OutputFormat = OutputFormat.TABLE

    @field_validator('tree', mode='before')
    @classmethod
    def _parse_tree(cls, value):
        if isinstance(value, str):
            return TreeSpec.parse(value)
        return value

    @model_validator(mode='after')
    def _check_board(self) -> 'SolveRequest':
        if (self.tree is None) == (self.graph_path is None):
            raise ValueError("give exactly one of --tree and --graph")
        if self.tree is not None and self.start is not None and self.start >= self.tree.vertex_count:
            raise ValueError(f"--start {self.start} is not a vertex of {self.tree.label()}")
        if self.method is Method.CLOSED and self.tree is None:
            raise ClosedFormUnavailableError("closed forms exist only for --tree boards")
        if self.method is Method.MC and self.seed is None:
            raise ValueError("--method mc requires --seed")
        return self

    @property
    def board_label(self) -> str:
        if self.tree is not None:
            return self.tree.label()
        return self.graph_path.stem
