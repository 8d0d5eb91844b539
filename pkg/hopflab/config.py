from fractions import Fraction
from typing import Any, Dict, List, Optional

import ujson
from pydantic import BaseModel, ValidationError, validator

from hopflab.exceptions import ConfigError
from hopflab.utils import is_prime


class SuiteBounds(BaseModel):
    """SuiteBounds.
    Search bounds of a verification suite. max_order and size left as None
    fall back to the suite's own defaults.
    """
    max_order: Optional[int] = None
    max_generators: int = 6
    max_homs: int = 4096
    max_subgroup_order: int = 4096
    seed: int = 0
    size: Optional[int] = None
    primes: List[int] = [2, 3]
    levels: List[int] = [1, 2]
    workers: int = 1

    @validator('max_order', 'max_generators', 'max_homs',
               'max_subgroup_order', 'workers')
    def positive(cls, v):
        if v is not None and v < 1:
            raise ValueError(f'must be positive, got {v}')
        return v

    @validator('size')
    def non_negative(cls, v):
        if v is not None and v < 0:
            raise ValueError(f'must be >= 0, got {v}')
        return v

    @validator('primes', each_item=True)
    def prime(cls, v):
        if not is_prime(v):
            raise ValueError(f'{v} is not a prime')
        return v

    @validator('levels', each_item=True)
    def level(cls, v):
        if v < 1:
            raise ValueError(f'levels must be >= 1, got {v}')
        return v

    def resolved(self, max_order: int, size: int,
                 max_homs: Optional[int] = None) -> 'SuiteBounds':
        """Copy with the suite defaults filled in.

        max_homs is only replaced when it was not given explicitly.
        """
        update = {
            'max_order': self.max_order if self.max_order is not None
            else max_order,
            'size': self.size if self.size is not None else size,
        }
        if max_homs is not None and 'max_homs' not in self.__fields_set__:
            update['max_homs'] = max_homs
        return self.copy(update=update)


class CorpusSpec(BaseModel):
    """CorpusSpec.
    Generation is a pure function of these fields.
    """
    seed: int = 0
    size: int = 500
    max_prime: int = 5
    max_exponent: int = 4
    max_finite_mult: int = 3
    infinite_mult_probability: Fraction = Fraction(1, 5)

    class Config:
        arbitrary_types_allowed = True
        json_encoders = {Fraction: str}

    @validator('infinite_mult_probability', pre=True)
    def probability(cls, v):
        try:
            v = Fraction(str(v)) if not isinstance(v, Fraction) else v
        except ValueError:
            raise ValueError(f'not a rational number: {v!r}')
        if not 0 <= v <= 1:
            raise ValueError(f'probability must lie in [0, 1], got {v}')
        return v

    @validator('size')
    def non_negative(cls, v):
        if v < 0:
            raise ValueError(f'must be >= 0, got {v}')
        return v

    @validator('max_prime')
    def has_prime(cls, v):
        if v < 2:
            raise ValueError(f'max_prime must be >= 2, got {v}')
        return v

    @validator('max_exponent', 'max_finite_mult')
    def positive(cls, v):
        if v < 1:
            raise ValueError(f'must be positive, got {v}')
        return v


class CliConfig(BaseModel):
    """CliConfig.
    Values of an optional JSON config file; keys are the long flag names
    with dashes replaced by underscores.
    """
    json_output: bool = False
    debug: bool = False
    bounds: SuiteBounds = SuiteBounds()
    corpus: CorpusSpec = CorpusSpec()

    class Config:
        arbitrary_types_allowed = True


_BOUND_KEYS = set(SuiteBounds.__fields__)
_CORPUS_KEYS = {'max_prime', 'max_exponent', 'max_finite_mult',
                'infinite_mult_probability'}


def make_config(values: Dict[str, Any]) -> CliConfig:
    """make_config.
    Build a CliConfig from flat keys, as found in a config file or parsed
    from the command line.

    Raises:
        ConfigError: on unknown keys or invalid values
    """
    values = dict(values)
    unknown = set(values) - _BOUND_KEYS - _CORPUS_KEYS - {'json', 'debug'}
    if unknown:
        raise ConfigError(f'Unknown config keys: {sorted(unknown)}',
                          errors=sorted(unknown))
    try:
        bounds = SuiteBounds(**{k: v for k, v in values.items()
                                if k in _BOUND_KEYS})
        corpus = CorpusSpec(**{k: v for k, v in values.items()
                               if k in _CORPUS_KEYS})
    except ValidationError as exc:
        raise ConfigError(f'Invalid configuration: {exc}', errors=exc.errors())
    return CliConfig(json_output=bool(values.get('json', False)),
                     debug=bool(values.get('debug', False)),
                     bounds=bounds, corpus=corpus)


def load_config_file(path: str) -> Dict[str, Any]:
    """load_config_file.

    Raises:
        ConfigError: if the file is missing or not a JSON object
    """
    try:
        with open(path, 'r') as fp:
            data = ujson.load(fp)
    except (OSError, ValueError) as exc:
        raise ConfigError(f'Cannot read config file {path}: {exc}')
    if not isinstance(data, dict):
        raise ConfigError(f'Config file {path} must hold a JSON object')
    return {k.replace('-', '_'): v for k, v in data.items()}
