from .rich_command import PROG_NAME, RichCommand
from .rich_group import RichGroup
