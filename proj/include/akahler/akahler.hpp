#pragma once

#include "akahler/catalog.hpp"
#include "akahler/dim4.hpp"
#include "akahler/geometry.hpp"
#include "akahler/ladder.hpp"
#include "akahler/lie_algebra.hpp"
#include "akahler/properties.hpp"
#include "akahler/random.hpp"
#include "akahler/structure_file.hpp"
#include "akahler/theta.hpp"
#include "akahler/verifier.hpp"
