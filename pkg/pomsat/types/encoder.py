from typing import Literal, Text

from pydantic import BaseModel, ConfigDict, Field, model_validator

EncodingKind = Literal["memoryless", "small-memory"]


class EncodeParams(BaseModel):
    model_config = ConfigDict(frozen=True)

    k: int = Field(..., ge=1, description="Path-length horizon.")
    mu: int = Field(default=1, ge=1, description="Number of memory states.")
    deterministic: bool = False
    encoding: EncodingKind = "small-memory"
    m0: int = Field(default=0, ge=0, description="Initial memory state.")
    both_directions: bool = True

    @model_validator(mode="after")
    def _check_memory(self):
        if self.m0 >= self.mu:
            raise ValueError(f"Initial memory {self.m0} out of range 0..{self.mu - 1}")
        if self.encoding == "memoryless" and self.mu != 1:
            raise ValueError("The memoryless encoding requires mu = 1")
        return self

    @property
    def label(self) -> Text:
        return f"{self.encoding}(k={self.k}, mu={self.mu})"
