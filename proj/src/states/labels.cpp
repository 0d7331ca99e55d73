#include "bcabe/states/labels.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace bcabe {

std::string_view to_string(FamilyLabel f)
{
    switch (f) {
    case FamilyLabel::RhoPlus: return "rho+";
    case FamilyLabel::RhoMinus: return "rho-";
    case FamilyLabel::SigmaPlus: return "sigma+";
    case FamilyLabel::SigmaMinus: return "sigma-";
    }
    return "?";
}

std::string_view to_string(BellLabel b)
{
    switch (b) {
    case BellLabel::PhiPlus: return "Phi+";
    case BellLabel::PhiMinus: return "Phi-";
    case BellLabel::PsiPlus: return "Psi+";
    case BellLabel::PsiMinus: return "Psi-";
    }
    return "?";
}

FamilyLabel parse_family(std::string_view text)
{
    for (FamilyLabel f : kAllFamilies)
        if (to_string(f) == text)
            return f;
    throw std::invalid_argument("unknown family '" + std::string(text) + "' (expected rho+, rho-, sigma+ or sigma-)");
}

bool is_rho(FamilyLabel f)
{
    return f == FamilyLabel::RhoPlus || f == FamilyLabel::RhoMinus;
}

int sign_of(FamilyLabel f)
{
    return (f == FamilyLabel::RhoPlus || f == FamilyLabel::SigmaPlus) ? 1 : -1;
}

FamilyLabel family_of(bool rho, int sign)
{
    if (rho)
        return sign > 0 ? FamilyLabel::RhoPlus : FamilyLabel::RhoMinus;
    return sign > 0 ? FamilyLabel::SigmaPlus : FamilyLabel::SigmaMinus;
}

PureState bell_state(BellLabel b)
{
    const double h = 1.0 / std::sqrt(2.0);
    Vector v = Vector::Zero(4);
    switch (b) {
    case BellLabel::PhiPlus:
        v(0) = h;
        v(3) = h;
        break;
    case BellLabel::PhiMinus:
        v(0) = h;
        v(3) = -h;
        break;
    case BellLabel::PsiPlus:
        v(1) = h;
        v(2) = h;
        break;
    case BellLabel::PsiMinus:
        v(1) = h;
        v(2) = -h;
        break;
    }
    return PureState(2, std::move(v));
}

} // namespace bcabe
