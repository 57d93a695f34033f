"""
File access for ideals and reports.

Ideal files are read asynchronously; JSON reports are stored one file per
report next to an index describing what was stored.
"""

import hashlib
import json
import logging
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, List, Optional

import aiofiles

from .algebra import IdealGens, parse_ideal
from .interfaces import ReportStorage, StorageError

logger = logging.getLogger(__name__)


async def read_text(path: str) -> str:
    """
    Read a UTF-8 text file.

    Raises:
        StorageError: If the file cannot be read
    """
    try:
        async with aiofiles.open(path, "r", encoding="utf-8") as f:
            return await f.read()
    except OSError as e:
        raise StorageError(f"Cannot read {path}: {e}")


async def load_ideal(path: str) -> IdealGens:
    """
    Load an ideal file: one generator per line, blank lines and ``#`` comments ignored.

    Args:
        path: Path to the ideal file

    Returns:
        The parsed ideal

    Raises:
        StorageError: If the file cannot be read
        PolynomialSyntaxError: If a line does not parse
    """
    ideal = parse_ideal(await read_text(path))
    logger.debug(f"Loaded {ideal} from {path}")
    return ideal


def digest(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


class FileSystemReportStorage(ReportStorage):
    """
    File system-based storage for JSON reports.

    Each report is written to ``<base>/reports/<name>.json``;
    ``<base>/index.json`` maps report names to the command, input digest,
    seed and time of the run.
    """

    def __init__(self, base_path: str = ".newt"):
        """
        Initialize file system storage.

        Args:
            base_path: Base directory for stored reports
        """
        self.base_path = Path(base_path)
        self.reports_dir = self.base_path / "reports"
        self.index_file = self.base_path / "index.json"

        self._ensure_directories()

    def _ensure_directories(self) -> None:
        try:
            self.reports_dir.mkdir(parents=True, exist_ok=True)
            logger.debug(f"Storage directories ensured at {self.base_path}")
        except OSError as e:
            raise StorageError(f"Failed to create storage directories: {e}")

    def _get_report_path(self, name: str) -> Path:
        return self.reports_dir / f"{name}.json"

    async def _load_index(self) -> Dict[str, Any]:
        """
        Load the report index from disk.

        Returns:
            Dictionary containing the report index
        """
        if not self.index_file.exists():
            return {"reports": {}, "last_updated": None}

        try:
            async with aiofiles.open(self.index_file, "r") as f:
                return json.loads(await f.read())
        except (json.JSONDecodeError, OSError) as e:
            logger.error(f"Error loading index: {e}")
            return {"reports": {}, "last_updated": None}

    async def _save_index(self, index: Dict[str, Any]) -> None:
        try:
            index["last_updated"] = datetime.now().isoformat()
            async with aiofiles.open(self.index_file, "w") as f:
                await f.write(json.dumps(index, indent=2))
        except OSError as e:
            logger.error(f"Error saving index: {e}")
            raise StorageError(f"Failed to save index: {e}")

    async def save_report(
        self, name: str, command: str, report: Dict[str, Any], source: str, seed: int
    ) -> None:
        """
        Save a report and record it in the index.

        Args:
            name: Report name
            command: CLI command that produced the report
            report: JSON-serializable report
            source: Input text, stored in the index as a SHA-256 digest
            seed: Seed of the run

        Raises:
            StorageError: If the report cannot be written
        """
        try:
            async with aiofiles.open(self._get_report_path(name), "w") as f:
                await f.write(json.dumps(report, indent=2, sort_keys=True))
        except OSError as e:
            raise StorageError(f"Failed to save report {name}: {e}")

        index = await self._load_index()
        index["reports"][name] = {
            "command": command,
            "digest": digest(source),
            "seed": seed,
            "timestamp": datetime.now().isoformat(),
        }
        await self._save_index(index)
        logger.info(f"Saved {command} report {name} to {self.base_path}")

    async def load_report(self, name: str) -> Optional[Dict[str, Any]]:
        path = self._get_report_path(name)
        if not path.exists():
            return None
        try:
            async with aiofiles.open(path, "r") as f:
                return json.loads(await f.read())
        except (json.JSONDecodeError, OSError) as e:
            logger.error(f"Error loading report {name}: {e}")
            return None

    async def list_reports(self, command: Optional[str] = None) -> List[Dict[str, Any]]:
        index = await self._load_index()
        entries = [{"name": name, **info} for name, info in sorted(index["reports"].items())]
        if command is not None:
            entries = [entry for entry in entries if entry["command"] == command]
        return entries

    async def delete_report(self, name: str) -> bool:
        """
        Delete a report and its index entry.

        Raises:
            StorageError: If the report file cannot be removed
        """
        path = self._get_report_path(name)
        index = await self._load_index()
        existed = path.exists() or name in index["reports"]
        try:
            path.unlink(missing_ok=True)
        except OSError as e:
            raise StorageError(f"Failed to delete report {name}: {e}")
        if index["reports"].pop(name, None) is not None:
            await self._save_index(index)
        return existed
