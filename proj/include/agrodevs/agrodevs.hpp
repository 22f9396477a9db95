#pragma once

#include <agrodevs/climate.hpp>
#include <agrodevs/commands.hpp>
#include <agrodevs/config.hpp>
#include <agrodevs/config_io.hpp>
#include <agrodevs/domain.hpp>
#include <agrodevs/engine.hpp>
#include <agrodevs/errors.hpp>
#include <agrodevs/io.hpp>
#include <agrodevs/landscape.hpp>
#include <agrodevs/metrics.hpp>
#include <agrodevs/rng.hpp>
#include <agrodevs/simulation.hpp>
#include <agrodevs/sweep.hpp>
#include <agrodevs/tables_io.hpp>
