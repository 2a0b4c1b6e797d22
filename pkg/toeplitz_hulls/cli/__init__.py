from .search import SearchConfig, SearchRow, run_search
from .spec_parser import parse_construction, parse_field, parse_tridiagonal, tokenize
from .table_fixtures import TABLES, TableFixture, construction_line
