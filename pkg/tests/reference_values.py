"""Frozen reference values; regenerate with scripts/freeze_reference_values.py."""

DIRICHLET_HALF = {
    3: complex(0.48086755769682865, 0.0),
    4: complex(0.6676914571896092, 0.0),
    5: complex(0.23175094750401576, 0.0),
    7: complex(0.31008936259836734, -0.07264193137017791),
    8: complex(0.3736917129125473, 0.0),
    11: complex(1.503380081983179, 0.22119976979773823),
}

DIRICHLET_HALF_PLUS_I = {
    (3, 1): complex(0.5328503169088302, 0.27472488398422157),
    (3, -1): complex(0.5328503169088302, -0.27472488398422157),
    (4, 1): complex(0.770086024473605, 0.2656590886113714),
    (4, -1): complex(0.770086024473605, -0.2656590886113714),
    (5, 1): complex(0.3156390835445889, 0.4535711974494603),
    (5, -1): complex(0.3156390835445889, -0.4535711974494603),
    (7, 1): complex(0.5757151107405889, 0.3645483456153849),
    (7, -1): complex(0.41261876329644087, -0.6789389861070741),
    (8, 1): complex(0.6388131217037878, 0.5691902455173409),
    (8, -1): complex(0.6388131217037878, -0.5691902455173409),
    (11, 1): complex(1.738790782724425, -0.04787059399505112),
    (11, -1): complex(1.494165105549729, 0.4946490489923368),
}

DIRICHLET_5_T100 = complex(0.21059417943142233, 0.544811244593602)
DELTA_HALF = 0.7921228386460306
CATALAN = 0.915965594177219
