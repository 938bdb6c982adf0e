"""
Registry initialization for every lab module.
"""

from deltalab.core.registries import task_registry
from deltalab.regularized.registry_init import init_regularized_registries
from deltalab.spectral.registry_init import init_spectral_registries
from deltalab.variational.registry_init import init_variational_registries
from deltalab.wavefn.registry_init import init_wavefn_registries
from deltalab.wellbarrier.registry_init import init_wellbarrier_registries


def init_all_registries():
    """Register every CLI task once, then freeze the task registry."""
    if task_registry.is_frozen():
        return
    init_spectral_registries()
    init_wavefn_registries()
    init_regularized_registries()
    init_wellbarrier_registries()
    init_variational_registries()
    task_registry.freeze()
