"""
File management utilities for exports and traces.
"""
from datetime import datetime
from pathlib import Path
from typing import Optional, List, Union

from config.settings import DEFAULT_EXPORTS_DIR


class FileManager:
    """
    Writes rendered exports into an output directory.
    """

    def __init__(self, exports_dir: Optional[Union[str, Path]] = None):
        self.exports_dir = Path(exports_dir) if exports_dir is not None else DEFAULT_EXPORTS_DIR

    # Export file operations
    def generate_export_filename(self, board_name: str, kind: str, extension: str) -> str:
        """
        Generate auto-named export filename.

        Format: {board}_{kind}_{YYYYMMDD_HHMMSS}.{ext}
        """
        board_clean = self._sanitize_filename(board_name)
        timestamp = datetime.now().strftime("%Y%m%d_%H%M%S")

        return f"{board_clean}_{kind}_{timestamp}.{extension}"

    def save_export_text(self, filename: str, content: str) -> Path:
        """Save text export file, creating the directory on first use."""
        self.exports_dir.mkdir(parents=True, exist_ok=True)
        file_path = self.exports_dir / filename
        with open(file_path, 'w', encoding='utf-8', newline='') as f:
            f.write(content)
        return file_path

    def save(self, board_name: str, kind: str, extension: str, content: str) -> Path:
        """Save ``content`` under an auto-generated name."""
        return self.save_export_text(self.generate_export_filename(board_name, kind, extension), content)

    def list_exports(self, pattern: str = "*") -> List[Path]:
        """List export files matching pattern."""
        if not self.exports_dir.exists():
            return []
        return sorted(self.exports_dir.glob(pattern))

    def delete_export(self, filename: str) -> bool:
        """Delete an export file."""
        file_path = self.exports_dir / filename
        if file_path.exists():
            file_path.unlink()
            return True
        return False

    @staticmethod
    def _sanitize_filename(name: str) -> str:
        """Sanitize a string for use in filename."""
        # Remove or replace invalid characters
        invalid_chars = '<>:"/\\|?*='
        result = name
        for char in invalid_chars:
            result = result.replace(char, '')

        # Replace spaces and commas with underscores
        result = result.replace(' ', '_').replace(',', '_')

        # Remove leading/trailing dots and spaces
        result = result.strip('. ')

        # Truncate if too long
        if len(result) > 50:
            result = result[:50]

        return result or "board"


# Singleton instance
_file_manager: Optional[FileManager] = None


def get_file_manager(exports_dir: Optional[Union[str, Path]] = None) -> FileManager:
    """
    Get the global file manager instance, or a fresh one for an explicit
    directory.
    """
    global _file_manager
    if exports_dir is not None:
        return FileManager(exports_dir)
    if _file_manager is None:
        _file_manager = FileManager()
    return _file_manager
