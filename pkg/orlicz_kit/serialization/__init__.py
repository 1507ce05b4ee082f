from .json_output import (
    INF_TOKEN,
    SCHEMA_VERSION,
    decode_extreal,
    decode_real,
    dumps_json,
    encode_extreal,
)
from .measure_serializer import MeasureSerializer
from .report_serializer import ReportSerializer
from .young_serializer import YoungSerializer

__all__ = [
    "INF_TOKEN",
    "MeasureSerializer",
    "ReportSerializer",
    "SCHEMA_VERSION",
    "YoungSerializer",
    "decode_extreal",
    "decode_real",
    "dumps_json",
    "encode_extreal",
]
