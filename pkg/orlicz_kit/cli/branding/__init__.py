from .assets import LOGO_MINI
from .banner_renderer import BannerRenderer
from .status_printer import StatusPrinter
