import os
from typing import Any, ClassVar

import attrs
from dotenv import load_dotenv


@attrs.define()
class OuterdomConfig:
    """Solver limits and run settings."""

    env_prefix: ClassVar[str] = "OUTERDOM_"
    workers: int = attrs.field(default=1, converter=int)
    seed: int = attrs.field(default=0, converter=int)
    limit_bb: int = attrs.field(default=32, converter=int)
    limit_hamilton: int = attrs.field(default=16, converter=int)
    limit_enumerate: int = attrs.field(default=16, converter=int)
    limit_enumerate_ht: int = attrs.field(default=9, converter=int)
    # random graphs per sampled suite; 0 keeps the acceptance sizes
    corpus_total: int = attrs.field(default=0, converter=int)
    banded_k: bool = attrs.field(default=True, converter=attrs.converters.to_bool)
    debug: bool = attrs.field(default=False, converter=attrs.converters.to_bool)

    def __init__(self, **kwargs: Any) -> None:
        """Load configuration from keyword arguments and environment variables."""
        load_dotenv()
        init_dict = {}
        for field in attrs.fields(OuterdomConfig):
            # try to get the value from kwargs, then from environment variables
            env_value = os.getenv(f"{self.env_prefix}{field.name.upper()}")
            value = kwargs.get(field.name, env_value)
            if value is not None:
                init_dict[field.name] = value
        self.__attrs_init__(**init_dict)  # type: ignore[attr-defined]

    @property
    def parallel(self) -> bool:
        """Return True if corpus work should go to a process pool."""
        return self.workers > 1
