"""
Configuration settings for the elliptic mesh generator
"""
import os
from pathlib import Path
from dotenv import load_dotenv

# Load environment variables from .env file in project root
env_path = Path(__file__).parent.parent / '.env'
load_dotenv(dotenv_path=env_path)

# ============ Grid Configuration ============
DEFAULT_NX = int(os.getenv('MESH_NX', "33"))
DEFAULT_NY = int(os.getenv('MESH_NY', "33"))
DEFAULT_RADIUS = float(os.getenv('MESH_CIRCLE_RADIUS', "1.0"))

# ============ SOR Solver Configuration ============
DEFAULT_OMEGA = float(os.getenv('SOR_OMEGA', "1.90"))
DEFAULT_TOLERANCE = float(os.getenv('SOR_TOLERANCE', "1.0e-4"))
DEFAULT_MAX_ITER = int(os.getenv('SOR_MAX_ITER', "100"))

# ============ Stretching Configuration ============
NEAR_LINE_ALPHA = float(os.getenv('NEAR_LINE_ALPHA', "3.0"))
# Two-line clustering goes through the Eriksson stretch with this alpha
ERIKSSON_ALPHA = float(os.getenv('ERIKSSON_ALPHA', "3.0"))
BOUNDARY_ALPHA = float(os.getenv('BOUNDARY_ALPHA', "4.0"))

# ============ Numerical Thresholds ============
SINGULAR_DET_THRESHOLD = float(os.getenv('SINGULAR_DET_THRESHOLD', "1.0e-14"))
CORNER_TOLERANCE = float(os.getenv('CORNER_TOLERANCE', "1.0e-12"))

# ============ Output Configuration ============
GMV_COMPAT = os.getenv('GMV_COMPAT', "valid-gmv")
GMV_COMPAT_OPTIONS = ["valid-gmv", "paper-exact", "legacy"]
# Layouts without the z coordinate block
GMV_NO_Z_MODES = ("paper-exact", "legacy")

SHOW_PROGRESS = os.getenv('SHOW_PROGRESS', "true").lower() == "true"
LOG_LEVEL = os.getenv('LOG_LEVEL', "INFO").upper()

# ============ Styling ============
MESH_COLORS = {
    'boundary': '#d62728',
    'interior': '#1f77b4',
    'parameter': '#7f7f7f',
    'residual': '#2ca02c',
    'tolerance': '#ff7f0e',
}

SVG_STYLE = {
    'boundary_width': 1.5,
    'interior_width': 0.75,
    'margin_fraction': 0.02,
    'size_px': 800,
}
