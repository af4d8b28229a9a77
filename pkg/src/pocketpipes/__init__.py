"""Pocket-cube + pipe-laying hybrid game: engine, service, simulation."""

from .cube import (
    AssetClass,
    Classification,
    CubeState,
    DEFAULT_FACE_MAP,
    FaceClassMap,
    FaceObservation,
    Move,
    SOLVED,
    apply_move,
    apply_moves,
    canonicalize,
    classify,
    decode_scan,
    invert,
    parse_move,
    parse_scan_text,
    random_state,
    render_stickers,
)

__all__ = [
    "AssetClass",
    "Classification",
    "CubeState",
    "DEFAULT_FACE_MAP",
    "FaceClassMap",
    "FaceObservation",
    "Move",
    "SOLVED",
    "apply_move",
    "apply_moves",
    "canonicalize",
    "classify",
    "decode_scan",
    "invert",
    "parse_move",
    "parse_scan_text",
    "random_state",
    "render_stickers",
]
