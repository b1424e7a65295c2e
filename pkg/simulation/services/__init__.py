from simulation.services.simulation_service import SimulationService, trial_generator

__all__ = ['SimulationService', 'trial_generator']
