import sys
from pathlib import Path

from hypothesis import settings

sys.path.insert(0, str(Path(__file__).parent))

# numba compiles on first use, so a per-example deadline would be noise
settings.register_profile("twistlab", deadline=None)
settings.load_profile("twistlab")
