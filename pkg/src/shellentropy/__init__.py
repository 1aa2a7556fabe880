"""Information entropy measures for nuclear shell occupation probabilities."""
from .continuum import (
    ContinuousEntropyReport,
    LogLinearFit,
    RadialDensity,
    continuous_information_energy,
    differential_entropy,
    fit_log_linear,
    gaussian_density,
    information_energy_1d,
    total_entropy,
)
from .exceptions import (
    DatasetParseError,
    DegenerateDistribution,
    InconsistentRecord,
    UnsupportedNucleus,
)
from .measures import (
    EntropyReport,
    GaussianParams,
    NormalizedDistribution,
    full_report,
    gaussian_information_energy,
    minimum_uncertainty_entropy,
    onicescu_energy,
    onicescu_information,
    shannon_entropy,
    stotland_entropy,
    stotland_excess,
)
from .occupancy import (
    DepletionReport,
    OccupationRecord,
    ShellLabel,
    combine_spin_orbit,
    depletion,
    ipm_occupation,
    load_dataset,
    occupation_to_distribution,
)

__version__ = "0.1.0"
