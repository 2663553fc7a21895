"""Exception types shared across the engine."""


class EngineError(Exception):
    """Base class for all engine errors."""


class IngestionError(EngineError):
    """A corpus file could not be loaded (malformed CSV, unreadable file)."""


class SchemaError(EngineError):
    """A metadata document does not conform to its schema."""


class IndexBuildError(EngineError):
    """An index could not be built (e.g. duplicate document ids)."""


class MissingIndexError(EngineError):
    """A persisted index was expected but not found."""


class SpecUnresolvable(EngineError):
    """Query tokens did not resolve to any attribute or value of the chosen
    data source; callers should respond with query suggestions."""


class EncodingError(EngineError):
    """The analytical result cannot be encoded within the supported channels."""


class ExecutionError(EngineError):
    """A resolved analytical operation failed against the source table."""


class ConfigError(EngineError):
    """Engine configuration failed validation; the message names the field."""
