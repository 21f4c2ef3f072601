#!/usr/bin/env python3
"""
环境检查脚本

检查依赖是否安装，并打印 .env / 环境变量生效后的配置
"""

import importlib
import sys
from pathlib import Path

# 添加项目根目录到 Python 路径
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))


def check_dependencies() -> bool:
    """检查必要的依赖"""
    print("🔍 检查 Python 依赖...")

    required_packages = ["numpy", "sympy", "mpmath", "pydantic", "pydantic_settings", "dotenv"]
    missing_packages = []
    for package in required_packages:
        try:
            importlib.import_module(package)
        except ImportError:
            missing_packages.append(package)

    if missing_packages:
        print(f"❌ 错误: 缺少以下依赖包: {', '.join(missing_packages)}")
        print("请运行: pip install -r requirements.txt")
        return False

    print("✅ 依赖检查通过")
    return True


def print_settings():
    """打印生效的配置"""
    from schnorr_qaoa.config import AppConfig, LatticeConfig, QaoaConfig

    env_file = project_root / ".env"
    print(f"\n📄 .env 文件: {env_file if env_file.exists() else '未找到（使用默认值）'}")

    for title, settings in (
        ("格 (LATTICE_)", LatticeConfig),
        ("QAOA (QAOA_)", QaoaConfig),
        ("应用 (APP_)", AppConfig),
    ):
        print(f"\n📋 {title}")
        for key, value in settings.model_dump().items():
            print(f"   {key:<14} = {value}")


def main():
    print("=" * 60)
    print("📋 Schnorr-QAOA 环境检查")
    print("=" * 60)

    if not check_dependencies():
        sys.exit(1)
    print_settings()
    print("\n" + "=" * 60)


if __name__ == "__main__":
    main()
