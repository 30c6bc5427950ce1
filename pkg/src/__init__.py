"""
Laser speckle monitoring for freeze-drying
Texture features from speckle frames, two-class state classification and event detection
"""

__version__ = "1.0.0"
