"""Tests for run configuration loading."""

import json

import pytest

from cli.utils.config_manager import ConfigManager
from deltalab.core.exceptions import ConfigError


@pytest.fixture
def manager():
    """Fresh config manager"""
    return ConfigManager()


class TestFlatFiles:
    """Test 'key = value' parsing."""

    def test_parse(self, manager):
        """Test comments, blank lines and whitespace."""
        text = "# sweep setup\nD = 3\n\ng = hardcore  # hard core\nK = 10,100\n"
        assert manager.parse_flat(text) == {"D": "3", "g": "hardcore", "K": "10,100"}

    def test_missing_equals(self, manager):
        """Test lines without '=' are reported with their line number."""
        with pytest.raises(ConfigError, match=r"run\.cfg:2"):
            manager.parse_flat("D = 3\nhardcore\n", source="run.cfg")

    def test_empty_key(self, manager):
        """Test '= value' lines."""
        with pytest.raises(ConfigError, match="empty key"):
            manager.parse_flat("= 3\n")

    def test_duplicate_key(self, manager):
        """Test repeated keys."""
        with pytest.raises(ConfigError, match="duplicate key 'D'"):
            manager.parse_flat("D = 3\nD = 2\n")


class TestFlags:
    """Test --param flags."""

    def test_parse(self, manager):
        """Test later flags win."""
        assert manager.parse_flags(["K=10", "g = 2", "K=20"]) == {"K": "20", "g": "2"}
        assert manager.parse_flags(None) == {}

    def test_malformed(self, manager):
        """Test flags without '=' or key."""
        with pytest.raises(ConfigError):
            manager.parse_flags(["K"])
        with pytest.raises(ConfigError):
            manager.parse_flags(["=3"])


class TestFiles:
    """Test loading from disk."""

    def test_flat_file(self, manager, tmp_path):
        """Test a plain text config."""
        path = tmp_path / "run.cfg"
        path.write_text("D = 2\nK = 1e4\n")
        assert manager.load_file(path) == (None, {"D": "2", "K": "1e4"})

    def test_yaml_file(self, manager, tmp_path):
        """Test a YAML config naming its command."""
        path = tmp_path / "run.yaml"
        path.write_text("command: sweep\nD: 3\nK: [10, 100]\n")
        assert manager.load_file(path) == ("sweep", {"D": 3, "K": [10, 100]})

    def test_manifest(self, manager, tmp_path):
        """Test a run manifest is read through its params block."""
        path = tmp_path / "out.csv.manifest.json"
        manifest = {"command": "shift", "params": {"K": 10}, "rows": 1}
        path.write_text(json.dumps(manifest))
        assert manager.load_file(path) == ("shift", {"K": 10})

    def test_invalid_yaml(self, manager, tmp_path):
        """Test YAML syntax errors."""
        path = tmp_path / "bad.yml"
        path.write_text("D: [3\n")
        with pytest.raises(ConfigError, match="Invalid YAML"):
            manager.load_file(path)

    def test_invalid_json(self, manager, tmp_path):
        """Test JSON syntax errors."""
        path = tmp_path / "bad.json"
        path.write_text("{")
        with pytest.raises(ConfigError, match="Invalid JSON"):
            manager.load_file(path)

    def test_non_mapping(self, manager, tmp_path):
        """Test structured files must hold a mapping."""
        path = tmp_path / "list.yaml"
        path.write_text("- 1\n- 2\n")
        with pytest.raises(ConfigError, match="mapping"):
            manager.load_file(path)

    def test_missing_file(self, manager, tmp_path):
        """Test unreadable paths."""
        with pytest.raises(ConfigError, match="Cannot read"):
            manager.load_file(tmp_path / "absent.cfg")


class TestResolve:
    """Test merging files and flags."""

    def test_flags_override_file(self, manager, tmp_path):
        """Test flag values replace file values."""
        path = tmp_path / "run.cfg"
        path.write_text("D = 3\nK = 100\n")
        assert manager.resolve("shift", path, ["K=200"]) == {"D": "3", "K": "200"}

    def test_command_mismatch(self, manager, tmp_path):
        """Test a file written for another command is refused."""
        path = tmp_path / "run.yaml"
        path.write_text("command: well\nR: 1\n")
        with pytest.raises(ConfigError, match="is for command 'well'"):
            manager.resolve("shift", path, None)

    def test_flags_only(self, manager):
        """Test resolution without a file."""
        assert manager.resolve("shift", None, ["g=1"]) == {"g": "1"}
