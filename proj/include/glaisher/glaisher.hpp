#ifndef GLAISHER_GLAISHER_HPP
#define GLAISHER_GLAISHER_HPP

#include "bernoulli.hpp"
#include "context.hpp"
#include "loggamma.hpp"
#include "power_series.hpp"
#include "quadrature.hpp"
#include "real.hpp"
#include "report.hpp"
#include "routes.hpp"

#endif  // GLAISHER_GLAISHER_HPP
