# src/shared/application/dto/cli_config.py
"""Command-line configuration DTO."""

import re
from typing import List, Literal, Optional

from pydantic import Field, field_validator, model_validator

from src.shared.application.dto.base import BaseDTO

_RANGE = re.compile(r"^\s*(\d+)\s*(?:\.\.\s*(\d+)\s*)?$")


def parse_order_range(text: str) -> list[int]:
    """``"N"`` -> [N]; ``"A..B"`` -> [A, ..., B]."""
    match = _RANGE.match(text)
    if not match:
        raise ValueError(f"--n expects N or A..B, got {text!r}")
    low = int(match.group(1))
    high = int(match.group(2)) if match.group(2) is not None else low
    if low < 1 or high < low:
        raise ValueError(f"--n range {text!r} is empty or starts below 1")
    return list(range(low, high + 1))


class CliConfig(BaseDTO):
    """Validated arguments of one invocation."""
    command: Literal["analyze", "verify", "enumerate", "closed-forms"]
    input: Optional[str] = Field(None, description="Input path, '-' for stdin")
    format: Literal["graph6", "edgelist"] = "graph6"
    n: Optional[List[int]] = Field(None, description="Orders, from --n N or --n A..B")
    suite: List[str] = Field(default_factory=lambda: ["all"])
    exact_only: bool = False
    jobs: Optional[int] = Field(None, ge=1)
    output: Optional[str] = None
    filter: str = "any"
    strict: bool = False
    verbose: bool = False

    @field_validator("n", mode="before")
    @classmethod
    def _parse_n(cls, value):
        if isinstance(value, str):
            return parse_order_range(value)
        return value

    @field_validator("suite", mode="before")
    @classmethod
    def _default_suite(cls, value):
        return value or ["all"]

    @model_validator(mode="after")
    def _check_command(self) -> "CliConfig":
        if self.command == "verify" and not self.n and self.input is None:
            raise ValueError("verify needs --n N, --n A..B or --input with a graph6 stream")
        if self.command in ("enumerate", "closed-forms") and not self.n:
            raise ValueError(f"{self.command} needs --n")
        return self
