"""Typed error hierarchy shared by the engine, service and CLI.

Every error the engine can raise maps 1:1 onto a wire-level error code
(the class name), so the service layer never has to translate.
"""


class GameError(Exception):
    """Base class for all engine errors."""

    @property
    def code(self) -> str:
        return type(self).__name__

    def to_dict(self) -> dict:
        return {"type": self.code, "detail": str(self)}


# --- scan decoding ---------------------------------------------------------

class ScanError(GameError):
    pass


class ScanFormatError(ScanError):
    pass


class MissingFace(ScanError):
    pass


class UnknownCubie(ScanError):
    pass


class DuplicateCubie(ScanError):
    pass


class OrientationParityError(ScanError):
    pass


# --- solver ----------------------------------------------------------------

class NotAtCheckpoint(GameError):
    pass


# --- terrain ---------------------------------------------------------------

class TerrainError(GameError):
    pass


class InvalidConfig(TerrainError):
    pass


class Blocked(TerrainError):
    """Character movement refused; ``reason`` is one of
    ElevationStep | River | Occupied | OutOfBounds."""

    def __init__(self, reason: str, detail: str = ""):
        super().__init__(detail or reason)
        self.reason = reason

    def to_dict(self) -> dict:
        d = super().to_dict()
        d["reason"] = self.reason
        return d


class NotInInventory(TerrainError):
    pass


class InvalidLocation(TerrainError):
    pass


class Occupied(TerrainError):
    pass


class Disconnected(TerrainError):
    pass


class DiameterMismatch(TerrainError):
    pass


class GeometryMismatch(TerrainError):
    pass


class NoUsesLeft(TerrainError):
    pass


class NotOnNetwork(TerrainError):
    pass


class NotAtShop(TerrainError):
    pass


class InsufficientFunds(TerrainError):
    pass


# --- session ---------------------------------------------------------------

class SessionError(GameError):
    pass


class WrongMode(SessionError):
    pass


class SessionOver(SessionError):
    pass


class ScanRejected(SessionError):
    """Scan submitted outside cube mode with a cube that is neither
    solved nor bottom-layer solved."""


class SchemaVersionMismatch(SessionError):
    pass


class CorruptLog(SessionError):
    pass
