#ifndef OSO_OSO_HPP
#define OSO_OSO_HPP

#include "oso/channel.hpp"
#include "oso/config.hpp"
#include "oso/config_io.hpp"
#include "oso/errors.hpp"
#include "oso/montecarlo.hpp"
#include "oso/phy.hpp"
#include "oso/random.hpp"
#include "oso/report.hpp"
#include "oso/runner.hpp"
#include "oso/scheduler.hpp"
#include "oso/units.hpp"

#endif  // OSO_OSO_HPP
