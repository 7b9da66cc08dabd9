from lplink import config_lplink
from lplink import modem
from lplink import channel
from lplink import link
from lplink import profiles
from lplink import montecarlo
from lplink import outputs
