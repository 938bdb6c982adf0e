"""Run configuration loading: flat key-value files, YAML, and run manifests"""

import json
from pathlib import Path
from typing import Any

import yaml

from deltalab.core.exceptions import ConfigError

YAML_SUFFIXES = {".yaml", ".yml"}
MANIFEST_SUFFIX = ".json"


class ConfigManager:
    """Turn config files and ``--param`` flags into one parameter mapping"""

    def parse_flat(self, text: str, source: str = "<text>") -> dict[str, str]:
        """Parse ``key = value`` lines; ``#`` starts a comment"""
        values: dict[str, str] = {}
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ConfigError(
                    f"{source}:{lineno}: expected 'key = value', got {raw.strip()!r}",
                    {"source": source, "line": lineno},
                )
            key, value = (part.strip() for part in line.split("=", 1))
            if not key:
                raise ConfigError(
                    f"{source}:{lineno}: empty key", {"source": source, "line": lineno}
                )
            if key in values:
                raise ConfigError(
                    f"{source}:{lineno}: duplicate key {key!r}",
                    {"source": source, "line": lineno, "key": key},
                )
            values[key] = value
        return values

    def parse_flags(self, flags: list[str] | None) -> dict[str, str]:
        """Parse repeated ``--param key=value`` flags; later flags win"""
        values: dict[str, str] = {}
        for flag in flags or []:
            key, sep, value = flag.partition("=")
            if not sep or not key.strip():
                raise ConfigError(
                    f"Parameter must look like key=value, got {flag!r}", {"param": flag}
                )
            values[key.strip()] = value.strip()
        return values

    def load_file(self, path: Path) -> tuple[str | None, dict[str, Any]]:
        """Load a config file.

        Returns the command the file names (manifests and YAML files may carry
        one) and its parameter mapping.
        """
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as e:
            raise ConfigError(
                f"Cannot read config file {path}: {e.strerror or e}",
                {"path": str(path)},
            ) from None

        suffix = path.suffix.lower()
        if suffix == MANIFEST_SUFFIX:
            try:
                data = json.loads(text)
            except json.JSONDecodeError as e:
                raise ConfigError(
                    f"Invalid JSON in {path}: {e.msg}", {"path": str(path)}
                ) from None
            return self._structured(data, path)
        if suffix in YAML_SUFFIXES:
            try:
                data = yaml.safe_load(text) or {}
            except yaml.YAMLError as e:
                raise ConfigError(
                    f"Invalid YAML in {path}: {e}", {"path": str(path)}
                ) from None
            return self._structured(data, path)
        return None, self.parse_flat(text, source=str(path))

    def _structured(
        self, data: Any, path: Path
    ) -> tuple[str | None, dict[str, Any]]:
        if not isinstance(data, dict):
            raise ConfigError(
                f"Config file {path} must hold a mapping", {"path": str(path)}
            )
        # Manifest layout: {"command": ..., "params": {...}, ...}
        if "params" in data:
            params = data["params"]
            if not isinstance(params, dict):
                raise ConfigError(
                    f"'params' in {path} must be a mapping", {"path": str(path)}
                )
            return data.get("command"), dict(params)
        data = dict(data)
        return data.pop("command", None), data

    def resolve(
        self,
        command: str,
        path: Path | None,
        flags: list[str] | None,
    ) -> dict[str, Any]:
        """File values overridden by flags, checked against the command name"""
        params: dict[str, Any] = {}
        if path is not None:
            file_command, params = self.load_file(path)
            if file_command is not None and file_command != command:
                raise ConfigError(
                    f"Config file {path} is for command '{file_command}', "
                    f"not '{command}'",
                    {"path": str(path), "command": file_command},
                )
        params.update(self.parse_flags(flags))
        return params


# Global config manager instance
config_manager = ConfigManager()
