from .asymptotics_table_renderer import AsymptoticsTableRenderer
from .audit_table_renderer import AuditTableRenderer
from .campaign_table_renderer import CampaignTableRenderer
from .constants_table_renderer import ConstantsTableRenderer
from .inverse_table_renderer import InverseTableRenderer
from .norm_table_renderer import NormTableRenderer
from .values import format_slack, format_value
