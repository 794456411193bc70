# Configuration module
from .settings import Settings, get_settings, reset_settings
from .engine_config import FiringPolicyKind, Method, OutputFormat

__all__ = ['Settings', 'get_settings', 'reset_settings', 'FiringPolicyKind', 'Method', 'OutputFormat']
