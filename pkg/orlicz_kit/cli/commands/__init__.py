from . import (
    constants_command,
    equiv_command,
    examples_command,
    fuzz_command,
    holder_command,
    inverse_command,
    norm_command,
    pwm_command,
    witness_command,
)
