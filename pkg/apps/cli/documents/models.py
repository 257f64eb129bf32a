"""
Document models for spaces, maps and constructible functions.

All numbers are strict integers; floats and numeric strings are rejected.
"""
from typing import Dict, List, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, RootModel, StrictBool, StrictInt, StrictStr, model_validator


class StrictModel(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)


class StratumEntry(StrictModel):
    id: StrictStr = Field(min_length=1)
    complex_dim: StrictInt = Field(ge=0)
    chi_c: StrictInt


class LinkEntry(StrictModel):
    """Link data for one pair lower < upper: a cone value, a Betti list, or both"""
    lower: StrictStr
    upper: StrictStr
    ichi_cone: Optional[StrictInt] = None
    link_ih_betti: Optional[List[StrictInt]] = None

    @model_validator(mode="after")
    def _one_encoding(self) -> "LinkEntry":
        if self.ichi_cone is None and self.link_ih_betti is None:
            raise ValueError("link entry needs ichi_cone or link_ih_betti")
        return self


class SpaceDocument(StrictModel):
    name: StrictStr = ""
    strata: List[StratumEntry] = Field(min_length=1)
    order: List[List[StrictStr]] = Field(default_factory=list)
    dense: Optional[StrictStr] = None
    links: Optional[List[LinkEntry]] = None

    @model_validator(mode="after")
    def _pairs(self) -> "SpaceDocument":
        for index, pair in enumerate(self.order):
            if len(pair) != 2:
                raise ValueError(f"order[{index}] must be a [lower, upper] pair")
        return self


class KernelEntry(StrictModel):
    target: StrictStr
    source: StrictStr
    chi: StrictInt


class MapDocument(StrictModel):
    """source and target are inline space documents or 'catalog:<name>' references"""
    name: StrictStr = ""
    source: Union[SpaceDocument, StrictStr]
    target: Union[SpaceDocument, StrictStr]
    kernel: List[KernelEntry] = Field(default_factory=list)
    validate_kernel: StrictBool = Field(default=True, alias="validate")

    model_config = ConfigDict(extra="forbid", frozen=True, populate_by_name=True)


class FunctionDocument(RootModel[Dict[StrictStr, StrictInt]]):
    """Stratum id -> value; strata left out are 0"""


class Counterexample(StrictModel):
    """A minimized failing fuzz trial, reproducible from seed and trial alone"""
    seed: StrictInt
    trial: StrictInt
    failed: List[StrictStr]
    map: MapDocument
    function: Dict[StrictStr, StrictInt]
    target_function: Dict[StrictStr, StrictInt]
    fault: Optional[KernelEntry] = None
