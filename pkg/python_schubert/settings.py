import logging


LOG_LEVEL_OPTIONS = {
    'QUIET': logging.WARNING,
    'VERBOSE': logging.INFO,
    'DEBUG': logging.DEBUG,
}

LOG_FORMAT = '%(asctime)s %(levelname)s %(name)s: %(message)s'
LOG_LEVEL = LOG_LEVEL_OPTIONS['QUIET']

# orbit closure of the simple roots stops here; exceeding it means "not finite type"
ROOT_ENUMERATION_GUARD = 10000
WEYL_GROUP_GUARD = 100000

# fixed-point tables up to this many masks-bits are filled on construction
EAGER_TABLE_MAX_LENGTH = 20

DEFAULT_COVER_HEIGHT_BOUND = 10

VERIFY_RANDOM_SEED = 20101
VERIFY_RANDOM_LISTS = 50
VERIFY_MAX_TOWER_LENGTH = 5
VERIFY_BOTT_ENTRY_RANGE = (-3, 3)
VERIFY_MAX_WORD_LENGTH = 8
VERIFY_MAX_NONREDUCED_LENGTH = 6
VERIFY_DEFAULT_TYPE = 'A2'
