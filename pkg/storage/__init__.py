# Storage module
from .file_manager import FileManager, get_file_manager

__all__ = ['FileManager', 'get_file_manager']
