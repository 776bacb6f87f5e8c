"""
Pydantic model for a parsed command line.
"""

from argparse import Namespace
from typing import List, Literal, Optional
from pydantic import BaseModel, Field, model_validator

Command = Literal["compute", "family", "verify", "census", "compare"]


class CliConfig(BaseModel):
    """Validated options of one CLI invocation."""

    command: Command = Field(..., description="Subcommand to run")
    inputs: List[str] = Field(default_factory=list, description="Graph input paths; '-' is standard input")
    fmt: Literal["edgelist", "graph6"] = Field(default="edgelist", description="Input graph format")
    json_output: bool = Field(default=False, description="Emit JSON instead of text")
    threads: int = Field(default=1, ge=1, description="Work partitions / worker processes")
    force: bool = Field(default=False, description="Override brute-force guards")
    eval_point: Optional[str] = Field(None, description="Rational evaluation point, 'p/q' or integer")
    family: Optional[str] = Field(None, description="Family name for the family subcommand")
    n: Optional[int] = Field(None, description="First family parameter")
    m: Optional[int] = Field(None, description="Second family parameter (complete-bipartite)")
    brute_force: bool = Field(default=False, description="Cross-check a closed form by enumeration")
    out: Optional[str] = Field(None, description="Catalog output path for census")
    max_n: Optional[int] = Field(None, description="Census ceiling")
    polys: List[str] = Field(default_factory=list, description="Polynomials to compare")
    suite: bool = Field(default=False, description="Run the built-in distinguishing suite")
    polynomial_path: Optional[str] = Field(None, description="Polynomial JSON to verify instead of computing one")
    log_level: str = Field(default="WARNING", description="Log level for this run")

    @model_validator(mode='after')
    def validate_fields(self) -> 'CliConfig':
        if self.command == "family" and (self.family is None or self.n is None):
            raise ValueError('family needs a family name and --n')
        if self.command == "census" and self.max_n is None:
            raise ValueError('census needs --max-n')
        if self.command == "compare" and not self.suite and len(self.inputs) != 2:
            raise ValueError('compare needs exactly two graph inputs or --suite')
        return self

    @classmethod
    def from_namespace(cls, args: Namespace) -> 'CliConfig':
        """Build from argparse output; options a subcommand does not define keep their defaults."""
        values = {key: value for key, value in vars(args).items() if value is not None}
        if isinstance(values.get("polys"), str):
            values["polys"] = [name.strip() for name in values["polys"].split(",") if name.strip()]
        return cls(**values)
