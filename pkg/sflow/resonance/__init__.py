from .locator import (
    BasePoint,
    ResonancePoint,
    Window,
    choose_base_point,
    default_group_radius,
    group_id_for,
    group_members,
    group_radius,
    real_resonance_points_on_segment,
    resonance_points,
)

__all__ = [
    "BasePoint",
    "ResonancePoint",
    "Window",
    "choose_base_point",
    "default_group_radius",
    "group_id_for",
    "group_members",
    "group_radius",
    "real_resonance_points_on_segment",
    "resonance_points",
]
