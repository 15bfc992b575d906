"""
Core subsystems of hardyderiv.
"""
