import os
import sys
from typing import List, Optional

import scipy.fft
from dotenv import load_dotenv

from app import create_app
from app.api import build_parser

# Load environment variables from .env file if it exists
load_dotenv()


def main(argv: Optional[List[str]] = None) -> int:
    # Get environment or default to production
    env = os.getenv('ZKLB_ENV', 'production')
    container = create_app(env)

    args = build_parser().parse_args(argv)
    threads = args.threads or container.config.threads()
    if threads:
        with scipy.fft.set_workers(threads):
            return args.route.dispatch(args)
    return args.route.dispatch(args)


if __name__ == '__main__':
    sys.exit(main())
