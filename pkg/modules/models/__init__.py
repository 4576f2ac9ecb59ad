from .models import (
    AgreementReport,
    CriterionResult,
    GroupResult,
)

__all__ = ["AgreementReport", "CriterionResult", "GroupResult"]
