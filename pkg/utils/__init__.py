"""
HNN Order Lab - Utils Package
Group backends, word problems and positive-cone search
"""

# Import main classes
try:
    from .scenario_runner import run_scenario, ScenarioReport
except ImportError as e:
    print(f"Warning: Could not import scenario runner: {e}")
    run_scenario = None
    ScenarioReport = None

try:
    from .claims import verify_claims
except ImportError as e:
    print(f"Warning: Could not import claim suite: {e}")
    verify_claims = None

try:
    from .file_handler import FileHandler
except ImportError as e:
    print(f"Warning: Could not import FileHandler: {e}")
    FileHandler = None

# Package version
__version__ = "1.0.0"

# Export main classes
__all__ = [
    'run_scenario',
    'ScenarioReport',
    'verify_claims',
    'FileHandler'
]
