# jackson/integrand_validator.py
import random

import config
from jackson.integrands import BaseIntegrand
from utils.errors import ContractViolationError
from utils.logger import logger


class IntegrandValidator:
    """Spot checks the symmetry and diagonal vanishing an integrand declares, block by block."""

    @staticmethod
    def validate_integrand(integrand, checks=None, seed=None):
        """
        Validates that an integrand may be fed to a partition-sum reduction.
        Args:
            integrand (BaseIntegrand): The integrand to check.
            checks (int, optional): Random points per block. Defaults to config.CONTRACT_SPOT_CHECKS.
            seed (int, optional): RNG seed. Defaults to config.CONTRACT_SEED.
        Returns:
            tuple: (bool: is_valid, str: error_message)
        """
        if not isinstance(integrand, BaseIntegrand):
            return False, "Integrand must inherit from BaseIntegrand"
        if not integrand.declared_symmetric:
            return False, f"{integrand.name} is not declared symmetric"
        if not integrand.declared_vanishing:
            return False, f"{integrand.name} is not declared to vanish on diagonals"

        rng = random.Random(config.CONTRACT_SEED if seed is None else seed)
        checks = config.CONTRACT_SPOT_CHECKS if checks is None else checks
        start = 0
        for size in integrand.blocks:
            if size >= 2:
                for _ in range(checks):
                    exps = [2 * rng.randint(0, 4) for _ in range(integrand.arity)]
                    i, j = rng.sample(range(start, start + size), 2)

                    swapped = list(exps)
                    swapped[i], swapped[j] = swapped[j], swapped[i]
                    if integrand.evaluate(tuple(exps)) != integrand.evaluate(tuple(swapped)):
                        return False, f"{integrand.name} is not symmetric under x{i + 1} <-> x{j + 1} at {exps}"

                    exps[j] = exps[i]
                    value = integrand.evaluate(tuple(exps))
                    if not value.is_zero():
                        return False, f"{integrand.name} does not vanish at x{i + 1} = x{j + 1}, point {exps}"
            start += size
        return True, "Integrand is valid"

    @staticmethod
    def require(integrand):
        """Raises ContractViolationError when validate_integrand fails."""
        is_valid, msg = IntegrandValidator.validate_integrand(integrand)
        if not is_valid:
            logger.error(f"Integrand contract violated: {msg}")
            raise ContractViolationError(msg)
        logger.debug(f"{integrand}: contract spot checks passed")


if __name__ == "__main__":
    from jackson.integrands import MultiPageIntegrand

    is_valid, msg = IntegrandValidator.validate_integrand(MultiPageIntegrand(3, (1, 2), (0, 1)))
    print(f"Integrand valid: {is_valid}")
    print(f"Validation message: {msg}")
