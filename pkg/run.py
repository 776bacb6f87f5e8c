import sys
from dotenv import load_dotenv

from allipoly.cli.main import main

# Load environment variables from .env file
load_dotenv()

if __name__ == "__main__":
    sys.exit(main())
