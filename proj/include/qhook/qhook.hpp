#ifndef QHOOK_QHOOK_HPP
#define QHOOK_QHOOK_HPP

#include <qhook/identities.hpp>
#include <qhook/partitions.hpp>
#include <qhook/series.hpp>
#include <qhook/verify.hpp>

#endif
