import csv
import json
from pathlib import Path

from pydantic import BaseModel, ValidationError

from src.core.errors import InfraError

OUTPUT_DIR = Path("out")


class ReportStore:
    """
    Reads input files and writes reports below base_dir.

    Output JSON is written with sorted keys and a trailing newline so that
    identical runs give byte-identical files.
    """

    def __init__(self, base_dir: Path | str = OUTPUT_DIR):
        self.base_dir = Path(base_dir)

    def _target(self, name: str | Path) -> Path:
        path = Path(name)
        if not path.is_absolute():
            path = self.base_dir / path
        path.parent.mkdir(parents=True, exist_ok=True)
        return path

    def write_json(self, name: str | Path, payload: dict) -> str:
        path = self._target(name)
        try:
            path.write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n", encoding="utf-8")
        except OSError as e:
            raise InfraError(f"Cannot write {path}: {e}") from e
        return str(path)

    def write_csv(self, name: str | Path, header: list[str], rows: list[list]) -> str:
        path = self._target(name)
        try:
            with open(path, "w", newline="", encoding="utf-8") as buffer:
                writer = csv.writer(buffer)
                writer.writerow(header)
                for row in rows:
                    writer.writerow([repr(x) if isinstance(x, float) else x for x in row])
        except OSError as e:
            raise InfraError(f"Cannot write {path}: {e}") from e
        return str(path)

    @staticmethod
    def read_model(path: str | Path, model: type[BaseModel]) -> BaseModel:
        """Parse a JSON input file against a schema."""
        try:
            text = Path(path).read_text(encoding="utf-8")
        except OSError as e:
            raise InfraError(f"Cannot read {path}: {e}") from e
        try:
            return model.model_validate_json(text)
        except ValidationError as e:
            raise InfraError(f"{path} does not match {model.__name__}: {e.error_count()} error(s)") from e
