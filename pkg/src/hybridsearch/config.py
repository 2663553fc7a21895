"""Engine configuration: paths, analyzer/scoring parameters, routing
thresholds, and the optional text-generation endpoint. Validated eagerly so a
bad config refuses to start with a named error."""

from __future__ import annotations

import hashlib
import json
import os
from dataclasses import dataclass, field
from pathlib import Path

from .classifier import Thresholds
from .corpus import bundled_data_path
from .errors import ConfigError
from .index import Bm25Params


@dataclass
class SummarySettings:
    enabled: bool = False
    endpoint: str | None = None
    api_key_env: str = "HYBRIDSEARCH_SUMMARY_KEY"
    timeout: float = 10.0

    def api_key(self) -> str | None:
        return os.environ.get(self.api_key_env)


@dataclass
class EngineConfig:
    data_dir: Path = field(default_factory=bundled_data_path)
    sources_dir: Path | None = None          # defaults to <data_dir>/sources
    viz_corpus: Path | None = None           # defaults to <data_dir>/viz_corpus.ndjson
    index_dir: Path = Path("search_index")
    max_ngram: int = 3
    bm25: Bm25Params = field(default_factory=Bm25Params)
    thresholds: Thresholds = field(default_factory=Thresholds)
    result_limit: int = 50
    summary: SummarySettings = field(default_factory=SummarySettings)
    host: str = "127.0.0.1"
    port: int = 8080
    cors_origins: list[str] = field(default_factory=lambda: ["*"])

    def __post_init__(self):
        self.data_dir = Path(self.data_dir)
        if self.sources_dir is None:
            self.sources_dir = self.data_dir / "sources"
        if self.viz_corpus is None:
            self.viz_corpus = self.data_dir / "viz_corpus.ndjson"
        self.sources_dir = Path(self.sources_dir)
        self.viz_corpus = Path(self.viz_corpus)
        self.index_dir = Path(self.index_dir)
        self.validate()

    def validate(self) -> None:
        if self.max_ngram < 1 or self.max_ngram > 3:
            raise ConfigError(f"max_ngram must be in [1, 3], got {self.max_ngram}")
        if self.result_limit < 1:
            raise ConfigError(f"result_limit must be >= 1, got {self.result_limit}")
        if self.thresholds.field_match < 0:
            raise ConfigError("thresholds.fieldMatch must be >= 0")
        if not 0.0 <= self.thresholds.norm_match <= 1.0:
            raise ConfigError("thresholds.normMatch must be in [0, 1]")
        if self.summary.timeout <= 0:
            raise ConfigError("summary.timeout must be positive")
        if not 1 <= self.port <= 65535:
            raise ConfigError(f"port must be in [1, 65535], got {self.port}")

    def behavior_hash(self) -> str:
        """Hash of the settings that affect indexing/scoring, for the manifest."""
        payload = json.dumps({
            "max_ngram": self.max_ngram,
            "bm25": self.bm25.to_dict(),
            "thresholds": self.thresholds.to_dict(),
        }, sort_keys=True)
        return hashlib.sha256(payload.encode()).hexdigest()


def load_config(path: str | Path | None = None, **overrides) -> EngineConfig:
    """Build a config from an optional JSON file plus keyword overrides."""
    data: dict = {}
    if path is not None:
        path = Path(path)
        if not path.exists():
            raise ConfigError(f"config file not found: {path}")
        try:
            data = json.loads(path.read_text())
        except json.JSONDecodeError as exc:
            raise ConfigError(f"config file {path} is not valid JSON: {exc}") from exc

    kwargs: dict = {}
    if "dataDir" in data:
        kwargs["data_dir"] = Path(data["dataDir"])
    if "sourcesDir" in data:
        kwargs["sources_dir"] = Path(data["sourcesDir"])
    if "vizCorpus" in data:
        kwargs["viz_corpus"] = Path(data["vizCorpus"])
    if "indexDir" in data:
        kwargs["index_dir"] = Path(data["indexDir"])
    if "maxNgram" in data:
        kwargs["max_ngram"] = int(data["maxNgram"])
    if "bm25" in data:
        try:
            kwargs["bm25"] = Bm25Params(k1=float(data["bm25"].get("k1", 1.2)),
                                        b=float(data["bm25"].get("b", 0.75)))
        except ValueError as exc:
            raise ConfigError(f"bm25: {exc}") from exc
    if "thresholds" in data:
        kwargs["thresholds"] = Thresholds(
            field_match=int(data["thresholds"].get("fieldMatch", 2)),
            norm_match=float(data["thresholds"].get("normMatch", 0.3)))
    if "resultLimit" in data:
        kwargs["result_limit"] = int(data["resultLimit"])
    if "summary" in data:
        s = data["summary"]
        kwargs["summary"] = SummarySettings(
            enabled=bool(s.get("enabled", False)),
            endpoint=s.get("endpoint"),
            api_key_env=s.get("apiKeyEnv", "HYBRIDSEARCH_SUMMARY_KEY"),
            timeout=float(s.get("timeout", 10.0)))
    if "host" in data:
        kwargs["host"] = str(data["host"])
    if "port" in data:
        kwargs["port"] = int(data["port"])
    if "corsOrigins" in data:
        kwargs["cors_origins"] = [str(o) for o in data["corsOrigins"]]

    kwargs.update(overrides)
    return EngineConfig(**kwargs)
