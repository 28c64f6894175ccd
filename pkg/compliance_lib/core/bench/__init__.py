from .generator import GeneratorParams, bpic_shaped_params, gen_log
from .harness import (BenchConfig, BenchRow, QueryTiming, format_rows,
                      rows_to_frame, run_bench, structure_reference_rows)

__all__ = [
    "GeneratorParams", "gen_log", "bpic_shaped_params", "BenchConfig",
    "BenchRow", "QueryTiming", "run_bench", "rows_to_frame", "format_rows",
    "structure_reference_rows",
]
