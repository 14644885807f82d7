BUILTIN_FAMILIES = ('A', 'B', 'C', 'D', 'F', 'G')

# smallest rank accepted for each family
FAMILY_MIN_RANK = {
    'A': 1,
    'B': 2,
    'C': 2,
    'D': 4,
    'F': 4,
    'G': 2,
}

FAMILY_FIXED_RANK = {
    'F': 4,
    'G': 2,
}

VARSPACE_PREFIXES = {
    'alpha': 'a',
    'lambda': 'l',
    'symbol': 't',
}

# order m_ij of s_i s_j indexed by a_ij * a_ji; None for infinite order
COXETER_ORDERS = {
    0: 2,
    1: 3,
    2: 4,
    3: 6,
}

CLI_COMMANDS = (
    'roots',
    'weyl',
    'billey',
    'psi',
    'pq',
    'product',
    'bott-restrict',
    'bott-k',
    'basechange',
    'verify',
)

VERIFY_SUITES = (
    'localization',
    'euler',
    'tau',
    'word-independence',
    'psi-axioms',
    'kk-vs-t',
    'yang-baxter',
    'duan',
    'basechange',
)

EXIT_CODES = {
    'OK': 0,
    'DOMAIN_ERROR': 1,
    'VERIFICATION_FAILED': 2,
}
