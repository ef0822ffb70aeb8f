#pragma once

#include "blue_field.hpp"
#include "catalog.hpp"
#include "characteristic.hpp"
#include "entailment.hpp"
#include "errors.hpp"
#include "expr.hpp"
#include "group_model.hpp"
#include "json_io.hpp"
#include "lattice.hpp"
#include "monomial.hpp"
#include "oracle.hpp"
#include "presentation.hpp"
#include "selector.hpp"
#include "semiring.hpp"
#include "spectrum.hpp"
#include "tits.hpp"
#include "verify.hpp"
